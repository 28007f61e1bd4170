#include "fglh/error.hpp"
#include "fglh/report.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace fglh;
using nlohmann::json;

namespace {

std::string fixture(const std::string& name)
{
    std::ifstream in(std::string(FGLH_FIXTURE_DIR) + "/" + name);
    REQUIRE(in);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

const Workspace& examples()
{
    static const Workspace ws = parse_workspace(fixture("examples.fgw"));
    return ws;
}

const Workspace& negatives()
{
    static const Workspace ws = parse_workspace(fixture("negatives.fgw"));
    return ws;
}

json one(const std::string& command, const std::string& target, const Workspace& ws, RunOptions opts = {})
{
    const json j = json::parse(to_json(run(command, target, ws, opts)));
    REQUIRE(j["sections"].size() == 1);
    return j["sections"][0];
}

} // namespace

TEST_CASE("command examples")
{
    const Report r = run("check-fgl", "Flin", examples(), {});
    CHECK(r.exit_code() == 0);
    CHECK(r.degree == 6);
    CHECK(r.sections.at(0).checks.size() == 6);
    CHECK(all_passed(r.sections.at(0).checks));

    CHECK(one("cocycle", "Flin", examples())["values"]["cocycle"] == "t@1*t@2");

    RunOptions integral;
    integral.integrality = true;
    const json cob = one("coboundary", "Flin", examples(), integral);
    CHECK(cob["values"]["status"] == "COBOUNDARY");
    CHECK(cob["values"]["witness"] == "1/2*t^2");
    CHECK(cob["values"]["integral"] == false);
    CHECK(cob["verdict"] == "PASS");
    CHECK_FALSE(one("coboundary", "Flin", examples())["values"].contains("integral"));

    const json faa = one("coboundary", "Faa", examples(), integral);
    CHECK(faa["values"]["integral"] == true);
    CHECK(faa["values"]["integral_witness"] == "b");

    CHECK(one("theta", "Flin", examples())["values"]["theta"] == "-x + t^2");
    CHECK(one("gseries", "Flin", examples())["values"]["g"] == "x + y - t^2");
    RunOptions three;
    three.n = 3;
    CHECK(one("power", "Flin", examples(), three)["values"]["series"] == "x + y + 9*t@1*t@2");
    CHECK(one("log", "Fmult", examples())["values"]["omega"] == "1 + x");
    CHECK(one("trivialize", "Flin", examples())["values"]["phi"] == "x - 1/2*t^2");
}

TEST_CASE("degree override")
{
    RunOptions opts;
    opts.degree = 3;
    const json j = json::parse(to_json(run("log", "Fmult", examples(), opts)));
    CHECK(j["degree"] == 3);
    CHECK(j["sections"][0]["values"]["log"] == "x - 1/2*x^2 + 1/3*x^3");
    opts.degree = 0;
    CHECK_THROWS_AS(run("log", "Fmult", examples(), opts), InputError);
}

TEST_CASE("failing commands and exit codes")
{
    CHECK(run("check-hopf", "Qdef", negatives(), {}).exit_code() == 1);
    CHECK(run("check-fgl", "Fskew", negatives(), {}).exit_code() == 1);
    CHECK(run("check-fgl", "Fshift", negatives(), {}).exit_code() == 1);
    CHECK(run("report", "", negatives(), {}).exit_code() == 1);

    // a non-coboundary is a decided answer; trivialize refuses with the certificate
    const json cob = one("coboundary", "Ftu", negatives());
    CHECK(cob["verdict"] == "PASS");
    CHECK(cob["values"]["status"] == "NOT-COBOUNDARY");
    CHECK(cob["values"]["certificate"]["weight"] == 2);
    const json triv = one("trivialize", "Ftu", negatives());
    CHECK(triv["verdict"] == "FAIL");
    CHECK(triv["values"].contains("certificate"));

    // a residual is reported only for failures
    const json skew = one("check-fgl", "Fskew", negatives());
    for (const auto& c : skew["checks"])
        CHECK(c.contains("residual") == (c["verdict"] == "FAIL"));

    CHECK_THROWS_AS(run("check-fgl", "Nope", examples(), {}), InputError);
    CHECK_THROWS_AS(run("check-hopf", "Flin", examples(), {}), InputError);
    CHECK_THROWS_AS(run("frobnicate", "Flin", examples(), {}), InputError);
    CHECK_THROWS_AS(run("check-fgl", "", examples(), {}), InputError);
    CHECK_THROWS_AS(run("report", "Flin", examples(), {}), InputError);

    // an fgl over an invalid Hopf algebra fails with the Hopf checks
    const Workspace ws = parse_workspace(fixture("negatives.fgw") + "\n[fgl Fdef]\nhopf = Qdef\ncoeff(1,0) = 1\ncoeff(0,1) = 1\n");
    const json def = one("check-fgl", "Fdef", ws);
    CHECK(def["verdict"] == "FAIL");
    CHECK(def["checks"][0]["name"].get<std::string>().rfind("hopf.", 0) == 0);
}

TEST_CASE("canonical JSON")
{
    const std::string a = to_json(run("report", "", examples(), {}));
    const std::string b = to_json(run("report", "", examples(), {}));
    CHECK(a == b);
    CHECK(a == fixture("examples.golden.json"));
    CHECK(a.find("timing") == std::string::npos);
    CHECK(to_json(run("report", "", examples(), {}), true).find("timing_ms") != std::string::npos);

    const json j = json::parse(a);
    CHECK(j.dump(2) + "\n" == a);
    CHECK(j["verdict"] == "PASS");
    CHECK(j["workspace_hash"] == workspace_hash(examples()));
    CHECK(j["sections"].size() == examples().hopfs.size() + examples().fgls.size() * fgl_commands().size());

    // comments and layout do not move the hash
    const Workspace reprinted = parse_workspace("# note\n" + print_workspace(examples()));
    CHECK(workspace_hash(reprinted) == workspace_hash(examples()));
    CHECK(workspace_hash(negatives()) != workspace_hash(examples()));
}
