#include "fglh/workspace.hpp"

#include "fglh/error.hpp"

#include <cctype>
#include <set>
#include <sstream>

namespace fglh {

namespace {

bool ident_start(char c)
{
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool ident_char(char c)
{
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool digit(char c)
{
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
}

std::string trim(std::string_view s)
{
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    return std::string(s.substr(b, e - b));
}

class ExprParser {
public:
    ExprParser(std::string_view text, const TablePtr& table, int legs, int line, int column)
        : text_(text), table_(table), legs_(legs), line_(line), column_(column)
    {
    }

    GradedPoly parse()
    {
        skip();
        if (at_end())
            fail("empty expression");
        GradedPoly p = expr();
        skip();
        if (!at_end())
            fail(std::string("unexpected '") + text_[pos_] + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what, std::size_t at) const
    {
        throw ParseError(what, line_, column_ + int(at));
    }
    [[noreturn]] void fail(const std::string& what) const { fail(what, pos_); }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    void skip()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(char c)
    {
        skip();
        if (peek() != c)
            return false;
        ++pos_;
        return true;
    }

    unsigned long natural(const char* what)
    {
        skip();
        const std::size_t start = pos_;
        while (digit(peek()))
            ++pos_;
        if (start == pos_)
            fail(std::string("expected ") + what);
        const std::string digits(text_.substr(start, pos_ - start));
        if (digits.size() > 9)
            fail(std::string(what) + " too large", start);
        return std::stoul(digits);
    }

    GradedPoly expr()
    {
        skip();
        const bool negate = accept('-');
        GradedPoly p = term();
        if (negate)
            p = -p;
        for (;;) {
            skip();
            if (accept('+'))
                p += term();
            else if (accept('-'))
                p -= term();
            else
                return p;
        }
    }

    GradedPoly term()
    {
        GradedPoly p = factor();
        while (accept('*'))
            p = p * factor();
        return p;
    }

    GradedPoly factor()
    {
        GradedPoly p = atom();
        if (accept('^')) {
            const std::size_t at = pos_;
            const unsigned long n = natural("exponent");
            if (n > 255)
                fail("exponent " + std::to_string(n) + " exceeds 255", at);
            p = power(p, unsigned(n), std::nullopt);
        }
        return p;
    }

    GradedPoly atom()
    {
        skip();
        const char c = peek();
        if (c == '(') {
            ++pos_;
            GradedPoly p = expr();
            if (!accept(')'))
                fail("expected ')'");
            return p;
        }
        if (digit(c)) {
            const std::size_t start = pos_;
            while (digit(peek()))
                ++pos_;
            std::string num(text_.substr(start, pos_ - start));
            Rational q(num, 10);
            const std::size_t save = pos_;
            skip();
            if (peek() == '/') {
                ++pos_;
                const std::size_t at = pos_;
                skip();
                const std::size_t ds = pos_;
                while (digit(peek()))
                    ++pos_;
                if (ds == pos_)
                    fail("expected a denominator", at);
                const mpz_class den(std::string(text_.substr(ds, pos_ - ds)), 10);
                if (den == 0)
                    fail("zero denominator", ds);
                q = Rational(mpz_class(num, 10), den);
                q.canonicalize();
            } else {
                pos_ = save;
            }
            return GradedPoly::constant(table_, q);
        }
        if (ident_start(c))
            return identifier();
        if (at_end())
            fail("unexpected end of expression");
        fail(std::string("unexpected '") + c + "'");
    }

    GradedPoly identifier()
    {
        const std::size_t start = pos_;
        while (ident_char(peek()))
            ++pos_;
        const std::string name(text_.substr(start, pos_ - start));
        std::optional<int> leg;
        std::size_t leg_at = pos_;
        skip();
        if (peek() == '@') {
            ++pos_;
            skip();
            leg_at = pos_;
            leg = int(natural("leg index"));
        }

        if (is_reserved_name(name))
            fail("'" + name + "' is a series variable, not an expression identifier; series are given as coefficient maps",
                 start);
        if (const auto b = table_->find_base(name)) {
            if (leg)
                fail("base-ring generator '" + name + "' takes no leg index", leg_at);
            return GradedPoly::slot(table_, table_->base_slot(*b));
        }
        const auto h = table_->find_hopf(name);
        if (!h)
            fail("undeclared identifier '" + name + "'", start);
        if (legs_ == 0)
            fail("H-generator '" + name + "' cannot appear in a base-ring expression", start);
        if (!leg) {
            if (legs_ > 1)
                fail("H-generator '" + name + "' needs a leg index in a " + std::to_string(legs_) + "-leg context", start);
            leg = 1;
        }
        if (*leg < 1 || *leg > legs_)
            fail("leg index " + std::to_string(*leg) + " out of range for a " + std::to_string(legs_) + "-leg context",
                 leg_at);
        return GradedPoly::slot(table_, table_->hopf_slot(*h, *leg));
    }

    std::string_view text_;
    const TablePtr& table_;
    int legs_;
    int line_;
    int column_;
    std::size_t pos_ = 0;
};

/// One `key = value` or `[header]` line with its location.
struct Line {
    int number;
    std::string raw; // comment stripped
};

struct Key {
    std::string name;           // "degree", "delta", "coeff", ...
    std::vector<std::string> args;
    int value_column;
    std::string value;
};

std::vector<Generator> parse_generator_list(const std::string& value, int line, int column, GenKind kind)
{
    std::vector<Generator> out;
    if (trim(value).empty())
        return out;
    std::size_t pos = 0;
    while (pos <= value.size()) {
        std::size_t comma = value.find(',', pos);
        if (comma == std::string::npos)
            comma = value.size();
        const std::string item = trim(std::string_view(value).substr(pos, comma - pos));
        const int col = column + int(pos);
        const std::size_t colon = item.find(':');
        if (colon == std::string::npos)
            throw ParseError("generator '" + item + "' needs a weight as name:weight", line, col);
        const std::string name = trim(item.substr(0, colon)), w = trim(item.substr(colon + 1));
        if (name.empty() || !ident_start(name[0]) || !std::all_of(name.begin(), name.end(), ident_char))
            throw ParseError("invalid generator name '" + name + "'", line, col);
        if (is_reserved_name(name))
            throw ParseError("'" + name + "' is reserved for series variables", line, col);
        if (w.empty() || w.size() > 3 || !std::all_of(w.begin(), w.end(), digit) || std::stoi(w) < 1 ||
            std::stoi(w) > 255)
            throw ParseError("generator '" + name + "' needs a weight in 1..255", line, col);
        out.push_back({name, std::stoi(w), kind});
        pos = comma + 1;
    }
    return out;
}

int parse_index(const std::string& s, int line, int column)
{
    const std::string t = trim(s);
    if (t.empty() || t.size() > 3 || !std::all_of(t.begin(), t.end(), digit))
        throw ParseError("expected a small non-negative index, got '" + t + "'", line, column);
    return std::stoi(t);
}

Key parse_key(const Line& l)
{
    const std::size_t eq = l.raw.find('=');
    if (eq == std::string::npos)
        throw ParseError("expected 'key = value'", l.number, 1);
    const std::string lhs = trim(std::string_view(l.raw).substr(0, eq));
    Key k;
    k.value = l.raw.substr(eq + 1);
    k.value_column = int(eq) + 2;
    const std::size_t open = lhs.find('(');
    if (open == std::string::npos) {
        k.name = lhs;
    } else {
        if (lhs.back() != ')')
            throw ParseError("expected ')' in key '" + lhs + "'", l.number, 1);
        k.name = trim(lhs.substr(0, open));
        std::string inner = lhs.substr(open + 1, lhs.size() - open - 2);
        std::size_t pos = 0;
        for (;;) {
            const std::size_t comma = inner.find(',', pos);
            k.args.push_back(trim(inner.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos)));
            if (comma == std::string::npos)
                break;
            pos = comma + 1;
        }
    }
    if (k.name.empty())
        throw ParseError("missing key before '='", l.number, 1);
    return k;
}

TablePtr make_table(const std::vector<Generator>& ring, const std::vector<Generator>& hopf, int line)
{
    std::vector<Generator> all = ring;
    all.insert(all.end(), hopf.begin(), hopf.end());
    try {
        return GeneratorTable::create(std::move(all));
    } catch (const StructuralError& e) {
        throw ParseError(e.what(), line, 1);
    }
}

enum class Section { None, Settings, Ring, Hopf, Fgl };

class WorkspaceParser {
public:
    explicit WorkspaceParser(std::string_view text) : text_(text) {}

    Workspace parse()
    {
        int number = 0;
        std::size_t pos = 0;
        while (pos <= text_.size()) {
            std::size_t nl = text_.find('\n', pos);
            if (nl == std::string_view::npos)
                nl = text_.size();
            std::string raw(text_.substr(pos, nl - pos));
            ++number;
            pos = nl + 1;
            if (!raw.empty() && raw.back() == '\r')
                raw.pop_back();
            if (const std::size_t hash = raw.find('#'); hash != std::string::npos)
                raw.erase(hash);
            if (trim(raw).empty())
                continue;
            line(Line{number, raw});
        }
        finish_section();
        return std::move(ws_);
    }

private:
    void line(const Line& l)
    {
        const std::string t = trim(l.raw);
        if (t.front() == '[') {
            header(l, t);
            return;
        }
        const Key k = parse_key(l);
        switch (section_) {
        case Section::None:
            throw ParseError("key '" + k.name + "' outside any section", l.number, 1);
        case Section::Settings:
            settings_key(l, k);
            break;
        case Section::Ring:
            ring_key(l, k);
            break;
        case Section::Hopf:
            hopf_key(l, k);
            break;
        case Section::Fgl:
            fgl_key(l, k);
            break;
        }
    }

    void header(const Line& l, const std::string& t)
    {
        if (t.back() != ']')
            throw ParseError("expected ']' to close the section header", l.number, int(l.raw.size()) + 1);
        finish_section();
        std::istringstream in(t.substr(1, t.size() - 2));
        std::string kind, name, extra;
        in >> kind >> name >> extra;
        if (!extra.empty())
            throw ParseError("unexpected '" + extra + "' in section header", l.number, 1);
        header_line_ = l.number;
        auto unnamed = [&] (const char* what) {
            if (!name.empty())
                throw ParseError(std::string("[") + what + "] takes no name", l.number, 1);
            if (!seen_.insert(what).second)
                throw ParseError(std::string("duplicate [") + what + "] section", l.number, 1);
        };
        auto named = [&] (const char* what) {
            if (name.empty() || !ident_start(name[0]) || !std::all_of(name.begin(), name.end(), ident_char))
                throw ParseError(std::string("[") + what + " NAME] needs an identifier name", l.number, 1);
            if (ws_.find_hopf(name) || ws_.find_fgl(name))
                throw ParseError("duplicate section name '" + name + "'", l.number, 1);
        };
        if (kind == "settings") {
            unnamed("settings");
            section_ = Section::Settings;
        } else if (kind == "ring") {
            unnamed("ring");
            if (!ws_.hopfs.empty())
                throw ParseError("[ring] must come before every [hopf] section", l.number, 1);
            section_ = Section::Ring;
        } else if (kind == "hopf") {
            named("hopf");
            section_ = Section::Hopf;
            hopf_ = HopfSection{name, nullptr, {}};
            hopf_gens_.clear();
            defined_.clear();
        } else if (kind == "fgl") {
            named("fgl");
            section_ = Section::Fgl;
            fgl_ = FglSection{name, "", {}, {}};
            fgl_table_ = nullptr;
            zero_coeffs_.clear();
        } else {
            throw ParseError("unknown section '" + kind + "'", l.number, 2);
        }
    }

    void finish_section()
    {
        if (section_ == Section::Hopf) {
            if (!hopf_.table)
                throw ParseError("[hopf " + hopf_.name + "] declares no generators", header_line_, 1);
            for (std::size_t i = 0; i < hopf_.table->hopf_count(); ++i)
                for (const char* map : {"delta", "epsilon", "antipode"})
                    if (!defined_.count(std::string(map) + "(" + hopf_.table->hopf(i).name + ")"))
                        throw ParseError("[hopf " + hopf_.name + "] is missing " + map + "(" +
                                             hopf_.table->hopf(i).name + ")",
                                         header_line_, 1);
            ws_.hopfs.push_back(std::move(hopf_));
        } else if (section_ == Section::Fgl) {
            if (fgl_.hopf.empty())
                throw ParseError("[fgl " + fgl_.name + "] needs 'hopf = NAME'", header_line_, 1);
            ws_.fgls.push_back(std::move(fgl_));
        }
        section_ = Section::None;
    }

    void once(const Line& l, const std::string& key)
    {
        if (!defined_.insert(key).second)
            throw ParseError("duplicate key '" + key + "'", l.number, 1);
    }

    void no_args(const Line& l, const Key& k)
    {
        if (!k.args.empty())
            throw ParseError("'" + k.name + "' takes no arguments", l.number, 1);
    }

    void settings_key(const Line& l, const Key& k)
    {
        if (k.name != "degree")
            throw ParseError("unknown setting '" + k.name + "'", l.number, 1);
        no_args(l, k);
        ws_.degree = parse_index(k.value, l.number, k.value_column);
    }

    void ring_key(const Line& l, const Key& k)
    {
        if (k.name != "generators")
            throw ParseError("unknown ring key '" + k.name + "'", l.number, 1);
        no_args(l, k);
        if (ring_defined_)
            throw ParseError("duplicate key 'generators'", l.number, 1);
        ring_defined_ = true;
        ws_.ring = parse_generator_list(k.value, l.number, k.value_column, GenKind::BaseRing);
        make_table(ws_.ring, {}, l.number);
    }

    void hopf_key(const Line& l, const Key& k)
    {
        if (k.name == "generators") {
            no_args(l, k);
            if (hopf_.table)
                throw ParseError("duplicate key 'generators'", l.number, 1);
            hopf_gens_ = parse_generator_list(k.value, l.number, k.value_column, GenKind::Hopf);
            if (hopf_gens_.empty())
                throw ParseError("a Hopf algebra needs at least one generator", l.number, k.value_column);
            hopf_.table = make_table(ws_.ring, hopf_gens_, l.number);
            hopf_.presentation = HopfPresentation::primitive(hopf_.table);
            return;
        }
        const int legs = k.name == "delta" ? 2 : k.name == "epsilon" ? 0 : k.name == "antipode" ? 1 : -1;
        if (legs < 0)
            throw ParseError("unknown hopf key '" + k.name + "'", l.number, 1);
        if (!hopf_.table)
            throw ParseError("'generators' must come before structure maps", l.number, 1);
        if (k.args.size() != 1)
            throw ParseError("'" + k.name + "' takes one generator name", l.number, 1);
        const auto g = hopf_.table->find_hopf(k.args[0]);
        if (!g)
            throw ParseError("'" + k.args[0] + "' is not a generator of this Hopf algebra", l.number, 1);
        once(l, k.name + "(" + k.args[0] + ")");
        GradedPoly p = parse_expression(k.value, hopf_.table, legs, l.number, k.value_column);
        auto& target = legs == 2 ? hopf_.presentation.delta : legs == 0 ? hopf_.presentation.counit
                                                                       : hopf_.presentation.antipode;
        target[*g] = std::move(p);
    }

    void fgl_key(const Line& l, const Key& k)
    {
        if (k.name == "hopf") {
            no_args(l, k);
            if (!fgl_.hopf.empty())
                throw ParseError("duplicate key 'hopf'", l.number, 1);
            const std::string name = trim(k.value);
            const HopfSection* h = ws_.find_hopf(name);
            if (!h)
                throw ParseError("unknown Hopf algebra '" + name + "'", l.number, k.value_column);
            fgl_.hopf = name;
            fgl_table_ = h->table;
            return;
        }
        if (k.name != "coeff" && k.name != "theta")
            throw ParseError("unknown fgl key '" + k.name + "'", l.number, 1);
        if (!fgl_table_)
            throw ParseError("'hopf' must come before coefficients", l.number, 1);
        if (k.name == "coeff") {
            if (k.args.size() != 2)
                throw ParseError("coeff takes two indices: coeff(i,j)", l.number, 1);
            const std::pair<int, int> ij{parse_index(k.args[0], l.number, 1), parse_index(k.args[1], l.number, 1)};
            if (fgl_.coefficients.count(ij) || zero_coeffs_.count(ij))
                throw ParseError("duplicate coeff(" + std::to_string(ij.first) + "," + std::to_string(ij.second) + ")",
                                 l.number, 1);
            GradedPoly p = parse_expression(k.value, fgl_table_, 2, l.number, k.value_column);
            if (p.is_zero())
                zero_coeffs_.insert(ij);
            else
                fgl_.coefficients.emplace(ij, std::move(p));
        } else {
            if (k.args.size() != 1)
                throw ParseError("theta takes one index: theta(i)", l.number, 1);
            const int i = parse_index(k.args[0], l.number, 1);
            if (fgl_.theta.count(i))
                throw ParseError("duplicate theta(" + std::to_string(i) + ")", l.number, 1);
            fgl_.theta.emplace(i, parse_expression(k.value, fgl_table_, 1, l.number, k.value_column));
        }
    }

    std::string_view text_;
    Workspace ws_;
    Section section_ = Section::None;
    int header_line_ = 0;
    std::set<std::string> seen_;
    bool ring_defined_ = false;
    HopfSection hopf_;
    std::vector<Generator> hopf_gens_;
    std::set<std::string> defined_;
    FglSection fgl_;
    TablePtr fgl_table_;
    std::set<std::pair<int, int>> zero_coeffs_;
};

std::string generator_list(const std::vector<Generator>& gens)
{
    std::string out;
    for (const auto& g : gens) {
        if (!out.empty())
            out += ", ";
        out += g.name + ":" + std::to_string(g.weight);
    }
    return out;
}

std::string expr_text(const GradedPoly& p, int legs)
{
    return to_string(p, PrintStyle{legs, default_var_names()});
}

bool same_polys(const std::vector<GradedPoly>& a, const std::vector<GradedPoly>& b)
{
    return a == b;
}

} // namespace

GradedPoly parse_expression(std::string_view text, const TablePtr& table, int legs, int line, int column)
{
    return ExprParser(text, table, legs, line, column).parse();
}

const HopfSection* Workspace::find_hopf(std::string_view name) const
{
    for (const auto& h : hopfs)
        if (h.name == name)
            return &h;
    return nullptr;
}

const FglSection* Workspace::find_fgl(std::string_view name) const
{
    for (const auto& f : fgls)
        if (f.name == name)
            return &f;
    return nullptr;
}

bool Workspace::operator==(const Workspace& o) const
{
    if (degree != o.degree || ring != o.ring || hopfs.size() != o.hopfs.size() || fgls.size() != o.fgls.size())
        return false;
    for (std::size_t i = 0; i < hopfs.size(); ++i) {
        const auto &a = hopfs[i], &b = o.hopfs[i];
        if (a.name != b.name || !same_table(a.table, b.table) ||
            !same_polys(a.presentation.delta, b.presentation.delta) ||
            !same_polys(a.presentation.counit, b.presentation.counit) ||
            !same_polys(a.presentation.antipode, b.presentation.antipode))
            return false;
    }
    for (std::size_t i = 0; i < fgls.size(); ++i) {
        const auto &a = fgls[i], &b = o.fgls[i];
        if (a.name != b.name || a.hopf != b.hopf || a.coefficients != b.coefficients || a.theta != b.theta)
            return false;
    }
    return true;
}

Workspace parse_workspace(std::string_view text)
{
    return WorkspaceParser(text).parse();
}

std::string print_workspace(const Workspace& ws)
{
    std::ostringstream out;
    out << "[settings]\ndegree = " << ws.degree << "\n";
    if (!ws.ring.empty())
        out << "\n[ring]\ngenerators = " << generator_list(ws.ring) << "\n";
    for (const auto& h : ws.hopfs) {
        const GeneratorTable& t = *h.table;
        std::vector<Generator> gens;
        for (std::size_t i = 0; i < t.hopf_count(); ++i)
            gens.push_back(t.hopf(i));
        out << "\n[hopf " << h.name << "]\ngenerators = " << generator_list(gens) << "\n";
        for (std::size_t i = 0; i < t.hopf_count(); ++i) {
            const std::string& n = t.hopf(i).name;
            out << "delta(" << n << ") = " << expr_text(h.presentation.delta[i], 2) << "\n";
            out << "epsilon(" << n << ") = " << expr_text(h.presentation.counit[i], 0) << "\n";
            out << "antipode(" << n << ") = " << expr_text(h.presentation.antipode[i], 1) << "\n";
        }
    }
    for (const auto& f : ws.fgls) {
        out << "\n[fgl " << f.name << "]\nhopf = " << f.hopf << "\n";
        for (const auto& [ij, p] : f.coefficients)
            out << "coeff(" << ij.first << "," << ij.second << ") = " << expr_text(p, 2) << "\n";
        for (const auto& [i, p] : f.theta)
            out << "theta(" << i << ") = " << expr_text(p, 1) << "\n";
    }
    return out.str();
}

TruncSeries fgl_body(const FglSection& f, const TablePtr& table, int degree)
{
    const GradedPoly x = GradedPoly::slot(table, table->var_slot(0)), y = GradedPoly::slot(table, table->var_slot(1));
    GradedPoly body(table);
    for (const auto& [ij, p] : f.coefficients)
        if (ij.first + ij.second <= degree)
            body += p * power(x, unsigned(ij.first), std::nullopt) * power(y, unsigned(ij.second), std::nullopt);
    return TruncSeries::from_body(body, 2, 2, degree);
}

std::optional<TruncSeries> fgl_theta(const FglSection& f, const TablePtr& table, int degree)
{
    if (f.theta.empty())
        return std::nullopt;
    const GradedPoly x = GradedPoly::slot(table, table->var_slot(0));
    GradedPoly body(table);
    for (const auto& [i, p] : f.theta)
        if (i <= degree)
            body += p * power(x, unsigned(i), std::nullopt);
    return TruncSeries::from_body(body, 1, 1, degree);
}

} // namespace fglh
