#include <concord/certify.hpp>

#include <concord/poly_io.hpp>

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

namespace concord {

long default_bound() {
    if (const char* env = std::getenv("CONCORDANCE_BOUND")) {
        char* end = nullptr;
        long b = std::strtol(env, &end, 10);
        if (end && *end == '\0' && b >= 1) return b;
        throw Error("CONCORDANCE_BOUND must be a positive integer");
    }
    return 16;
}

namespace {

struct FamilyParseError : Error {
    FamilyParseError(const std::string& file, size_t line, const std::string& what)
        : Error(file + ":" + std::to_string(line) + ": " + what) {}
};

struct Value {
    enum Kind { Int, Str, IntList, StrList } kind;
    long integer = 0;
    std::string text;
    std::vector<long> ints;
    std::vector<std::string> strings;
};

struct KeyValue {
    std::string key;
    Value value;
    size_t line;
};

struct Section {
    std::string header;  // family | knot | level
    size_t line;
    std::vector<KeyValue> entries;

    const KeyValue* find(const std::string& key) const {
        for (const auto& kv : entries)
            if (kv.key == key) return &kv;
        return nullptr;
    }
};

std::string strip_comment(const std::string& line) {
    bool quoted = false;
    for (size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '"') quoted = !quoted;
        if (line[i] == '#' && !quoted) return line.substr(0, i);
    }
    return line;
}

std::string trim(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

Value parse_value(const std::string& file, size_t line, const std::string& raw) {
    std::string v = trim(raw);
    if (v.empty()) throw FamilyParseError(file, line, "missing value");
    Value out{};
    if (v.front() == '"') {
        if (v.size() < 2 || v.back() != '"')
            throw FamilyParseError(file, line, "unterminated string");
        out.kind = Value::Str;
        out.text = v.substr(1, v.size() - 2);
        return out;
    }
    if (v.front() == '[') {
        if (v.back() != ']') throw FamilyParseError(file, line, "unterminated list");
        std::string inner = v.substr(1, v.size() - 2);
        std::vector<std::string> items;
        std::string cur;
        bool quoted = false;
        for (char c : inner) {
            if (c == '"') quoted = !quoted;
            if (c == ',' && !quoted) {
                items.push_back(trim(cur));
                cur.clear();
            } else {
                cur += c;
            }
        }
        if (!trim(cur).empty()) items.push_back(trim(cur));
        bool all_int = !items.empty();
        for (const auto& it : items)
            if (it.empty() || (!std::isdigit(static_cast<unsigned char>(it[0])) && it[0] != '-'))
                all_int = false;
        if (all_int) {
            out.kind = Value::IntList;
            for (const auto& it : items) out.ints.push_back(std::stol(it));
        } else {
            out.kind = Value::StrList;
            for (const auto& it : items) {
                if (it.size() < 2 || it.front() != '"' || it.back() != '"')
                    throw FamilyParseError(file, line, "list items must be quoted strings");
                out.strings.push_back(it.substr(1, it.size() - 2));
            }
        }
        return out;
    }
    try {
        size_t used = 0;
        long n = std::stol(v, &used);
        if (used != v.size()) throw std::invalid_argument(v);
        out.kind = Value::Int;
        out.integer = n;
        return out;
    } catch (const std::exception&) {
        throw FamilyParseError(file, line, "bad value '" + v + "'");
    }
}

long require_int(const std::string& file, const Section& s, const std::string& key) {
    const KeyValue* kv = s.find(key);
    if (!kv) throw FamilyParseError(file, s.line, "[" + s.header + "] missing key '" + key + "'");
    if (kv->value.kind != Value::Int)
        throw FamilyParseError(file, kv->line, "'" + key + "' must be an integer");
    return kv->value.integer;
}

std::string require_str(const std::string& file, const Section& s, const std::string& key) {
    const KeyValue* kv = s.find(key);
    if (!kv) throw FamilyParseError(file, s.line, "[" + s.header + "] missing key '" + key + "'");
    if (kv->value.kind != Value::Str)
        throw FamilyParseError(file, kv->line, "'" + key + "' must be a quoted string");
    return kv->value.text;
}

std::optional<std::string> optional_str(const std::string& file, const Section& s,
                                        const std::string& key) {
    const KeyValue* kv = s.find(key);
    if (!kv) return std::nullopt;
    if (kv->value.kind != Value::Str)
        throw FamilyParseError(file, kv->line, "'" + key + "' must be a quoted string");
    return kv->value.text;
}

struct LevelEntry {
    long index = 0;
    std::optional<std::string> only_knot;
    LevelBase base;
    size_t line = 0;
};

LevelBase build_level_base(const std::string& file, const Section& s) {
    LevelBase out;
    if (const KeyValue* atlas = s.find("base")) {
        if (atlas->value.kind != Value::Str)
            throw FamilyParseError(file, atlas->line, "'base' must be a quoted string");
        if (atlas->value.text == "figure1_R") {
            out.knot = figure1_R();
        } else {
            throw FamilyParseError(file, atlas->line,
                                   "unknown atlas base '" + atlas->value.text + "'");
        }
        out.eta = generator(out.knot.module, 0);
    } else {
        AbstractKnot ak;
        ak.name = require_str(file, s, "name");
        LaurentPoly delta;
        try {
            delta = parse_poly(require_str(file, s, "delta"));
        } catch (const ParseError& e) {
            throw FamilyParseError(file, s.line, std::string("bad delta: ") + e.what());
        }
        if (delta.is_zero() || delta.canonical().span() == 0)
            throw FamilyParseError(file, s.line, "delta must be a nonunit polynomial");
        LaurentPoly delta_sq = delta * delta;
        ak.alexander = delta_sq.canonical();
        ak.form = cyclic_form(delta_sq, LaurentPoly::one());
        ak.module = ak.form.module;
        out.knot = std::move(ak);
        LaurentPoly eta_poly = LaurentPoly::one();
        if (auto e = optional_str(file, s, "eta")) {
            try {
                eta_poly = parse_poly(*e);
            } catch (const ParseError& err) {
                throw FamilyParseError(file, s.line, std::string("bad eta: ") + err.what());
            }
        }
        out.eta = reduce_element(out.knot.module, {eta_poly});
    }
    if (auto c = optional_str(file, s, "slice"))
        out.knot.declared_facts.push_back(make_fact(FactKind::Slice, *c));
    if (auto c = optional_str(file, s, "unknotted_curve"))
        out.knot.declared_facts.push_back(make_fact(FactKind::UnknottedCurve, *c));
    bool has_slice = false, has_unknot = false;
    for (const auto& f : out.knot.declared_facts) {
        has_slice |= f.kind == FactKind::Slice;
        has_unknot |= f.kind == FactKind::UnknottedCurve;
    }
    if (!has_slice)
        throw FamilyParseError(file, s.line, "level base requires a slice declaration");
    if (!has_unknot)
        throw FamilyParseError(file, s.line, "level base requires an unknotted_curve declaration");
    return out;
}

}  // namespace

FamilySpec parse_family_text(const std::string& text, const std::string& filename) {
    std::vector<Section> sections;
    {
        std::istringstream in(text);
        std::string raw;
        size_t lineno = 0;
        while (std::getline(in, raw)) {
            ++lineno;
            std::string line = trim(strip_comment(raw));
            if (line.empty()) continue;
            if (line.front() == '[') {
                std::string header;
                if (line.starts_with("[[") && line.ends_with("]]"))
                    header = trim(line.substr(2, line.size() - 4));
                else if (line.ends_with("]"))
                    header = trim(line.substr(1, line.size() - 2));
                else
                    throw FamilyParseError(filename, lineno, "malformed section header");
                if (header != "family" && header != "knot" && header != "level")
                    throw FamilyParseError(filename, lineno, "unknown section '" + header + "'");
                sections.push_back({header, lineno, {}});
                continue;
            }
            size_t eq = line.find('=');
            if (eq == std::string::npos)
                throw FamilyParseError(filename, lineno, "expected 'key = value'");
            if (sections.empty())
                throw FamilyParseError(filename, lineno, "key outside of any section");
            std::string key = trim(line.substr(0, eq));
            if (key.empty()) throw FamilyParseError(filename, lineno, "empty key");
            sections.back().entries.push_back(
                {key, parse_value(filename, lineno, line.substr(eq + 1)), lineno});
        }
    }

    FamilySpec spec;
    spec.bound = default_bound();
    std::vector<LevelEntry> level_entries;
    bool saw_family = false;
    for (const auto& s : sections) {
        if (s.header == "family") {
            if (saw_family) throw FamilyParseError(filename, s.line, "duplicate [family] section");
            saw_family = true;
            spec.name = require_str(filename, s, "name");
            spec.depth = require_int(filename, s, "depth");
            if (spec.depth < 0) throw FamilyParseError(filename, s.line, "depth must be >= 0");
            if (const KeyValue* kv = s.find("bound")) {
                if (kv->value.kind != Value::Int || kv->value.integer < 1)
                    throw FamilyParseError(filename, kv->line, "bound must be a positive integer");
                spec.bound = kv->value.integer;
            }
            if (const KeyValue* kv = s.find("coefficients")) {
                if (kv->value.kind != Value::IntList)
                    throw FamilyParseError(filename, kv->line, "coefficients must be an integer list");
                spec.coefficients = kv->value.ints;
            }
        } else if (s.header == "knot") {
            KnotLeaf leaf;
            leaf.name = require_str(filename, s, "name");
            const KeyValue* twist = s.find("twist");
            const KeyValue* seif = s.find("seifert");
            if ((twist == nullptr) == (seif == nullptr))
                throw FamilyParseError(filename, s.line,
                                       "[[knot]] requires exactly one of 'twist' or 'seifert'");
            if (twist) {
                if (twist->value.kind != Value::Int || twist->value.integer == 0)
                    throw FamilyParseError(filename, twist->line,
                                           "twist must be a nonzero integer");
                leaf.seifert = twist_knot(twist->value.integer).seifert;
            } else {
                if (seif->value.kind != Value::Str)
                    throw FamilyParseError(filename, seif->line, "seifert must be a file path");
                try {
                    leaf.seifert = load_seifert_file(seif->value.text);
                } catch (const Error& e) {
                    throw FamilyParseError(filename, seif->line, e.what());
                }
            }
            if (auto c = optional_str(filename, s, "rho1_nonzero"))
                leaf.declared_facts.push_back(make_fact(FactKind::Rho1Nonzero, *c));
            if (const KeyValue* pf = s.find("prime_factors")) {
                if (pf->value.kind != Value::StrList)
                    throw FamilyParseError(filename, pf->line,
                                           "prime_factors must be a list of knot names");
                std::string citation = require_str(filename, s, "prime_factors_citation");
                DeclaredFact fact = make_fact(FactKind::PrimeDecomposition, citation);
                fact.factor_names = pf->value.strings;
                leaf.declared_facts.push_back(std::move(fact));
            }
            if (auto c = optional_str(filename, s, "slice"))
                leaf.declared_facts.push_back(make_fact(FactKind::Slice, *c));
            if (auto c = optional_str(filename, s, "ribbon_move")) {
                DeclaredFact fact = make_fact(FactKind::RibbonMove, *c);
                fact.text = *c;
                leaf.declared_facts.push_back(std::move(fact));
            }
            spec.knots.push_back(std::move(leaf));
        } else {  // level
            LevelEntry entry;
            entry.line = s.line;
            entry.index = require_int(filename, s, "index");
            entry.only_knot = optional_str(filename, s, "knot");
            entry.base = build_level_base(filename, s);
            level_entries.push_back(std::move(entry));
        }
    }
    if (!saw_family) throw FamilyParseError(filename, 1, "missing [family] section");
    if (spec.knots.empty()) throw FamilyParseError(filename, 1, "family has no knots");

    std::set<std::string> names;
    for (const auto& k : spec.knots)
        if (!names.insert(k.name).second)
            throw FamilyParseError(filename, 1, "name collision: '" + k.name + "'");

    for (const auto& e : level_entries) {
        if (e.index < 1 || e.index > spec.depth)
            throw FamilyParseError(filename, e.line,
                                   "level index " + std::to_string(e.index) +
                                       " outside 1.." + std::to_string(spec.depth));
        if (e.only_knot && !names.count(*e.only_knot))
            throw FamilyParseError(filename, e.line, "unknown knot '" + *e.only_knot + "'");
    }
    if (!spec.coefficients.empty() && spec.coefficients.size() != spec.knots.size())
        throw FamilyParseError(filename, 1, "coefficient count does not match knot count");

    // resolve levels[i][j]: a knot-scoped entry wins over the generic one
    spec.levels.assign(spec.knots.size(), {});
    for (size_t i = 0; i < spec.knots.size(); ++i) {
        for (long j = 1; j <= spec.depth; ++j) {
            const LevelEntry* chosen = nullptr;
            for (const auto& e : level_entries) {
                if (e.index != j) continue;
                if (e.only_knot) {
                    if (*e.only_knot != spec.knots[i].name) continue;
                    chosen = &e;
                    break;
                }
                if (!chosen) chosen = &e;
            }
            if (!chosen)
                throw FamilyParseError(filename, 1,
                                       "missing [[level]] with index " + std::to_string(j));
            spec.levels[i].push_back(chosen->base);
        }
    }
    return spec;
}

FamilySpec parse_family(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open family file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_family_text(buf.str(), path);
}

KnotExprPtr family_tower(const FamilySpec& spec, size_t knot_index) {
    if (knot_index >= spec.knots.size()) throw Error("knot index out of range");
    KnotExprPtr expr = make_leaf(spec.knots[knot_index]);
    for (long j = 0; j < spec.depth; ++j) {
        const LevelBase& base = spec.levels[knot_index][static_cast<size_t>(j)];
        expr = make_infection(make_abstract(base.knot), base.eta, expr);
    }
    return expr;
}

}  // namespace concord
