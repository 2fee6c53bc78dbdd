#include "rls/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "jordan_match.hpp"
#include "rls/appendix.hpp"
#include "rls/errors.hpp"

namespace rls {

namespace detail {

extern const std::string_view kTheorem1Source;
extern const std::string_view kZeta6Source;
extern const std::string_view kGeneralQSource;

std::optional<std::string> jordan_mismatch(const JordanData& got,
                                           const std::vector<std::pair<Cyclotomic, size_t>>& expected,
                                           int conductor) {
    size_t total = 0;
    bool ok = true;
    std::vector<Cyclotomic> seen;
    for (const auto& [value, length] : expected) {
        total += length;
        if (std::find(seen.begin(), seen.end(), value) != seen.end()) continue;
        seen.push_back(value);
        std::vector<size_t> lengths;
        for (const auto& [v, l] : expected) {
            if (v == value) lengths.push_back(l);
        }
        std::sort(lengths.rbegin(), lengths.rend());
        if (got.blocks_at(value) != lengths) ok = false;
    }
    if (ok && total == got.size()) return std::nullopt;
    return jordan_notation(got, conductor);
}

}  // namespace detail

namespace {

std::string trim(std::string_view s) {
    size_t b = 0;
    size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_words(std::string_view s) {
    std::istringstream is{std::string(s)};
    std::vector<std::string> out;
    for (std::string w; is >> w;) out.push_back(w);
    return out;
}

/// Splits at top-level commas; `offsets` receives each piece's start.
std::vector<std::string> split_top_level(std::string_view s, std::vector<size_t>& offsets) {
    std::vector<std::string> out;
    int depth = 0;
    size_t start = 0;
    for (size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || (s[i] == ',' && depth == 0)) {
            out.emplace_back(s.substr(start, i - start));
            offsets.push_back(start);
            start = i + 1;
        } else if (s[i] == '(') {
            ++depth;
        } else if (s[i] == ')') {
            --depth;
        }
    }
    return out;
}

size_t parse_length(const std::string& word, size_t column) {
    if (word.empty() || !std::all_of(word.begin(), word.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
        word.size() > 4 || std::stoul(word) == 0) {
        throw ParseError("expected a positive block length, got '" + word + "'", 1, column);
    }
    return std::stoul(word);
}

bool one_of(const std::string& w, std::initializer_list<const char*> options) {
    return std::any_of(options.begin(), options.end(), [&](const char* o) { return w == o; });
}

/// Checks the shape of an expectation so that mistakes surface as parse
/// errors instead of as failed checks.
void validate(const Expectation& e, int conductor) {
    const auto& w = e.words;
    auto bad = [&](const std::string& why) { throw ParseError("bad expectation: " + why, e.line, 1); };
    if (w.empty()) bad("nothing after 'expect'");
    const std::string& d = w[0];
    auto want = [&](size_t n) {
        if (w.size() != n) bad("'" + d + "' takes " + std::to_string(n - 1) + " argument(s)");
    };
    auto number = [&](const std::string& s) {
        if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
            s.size() > 6) {
            bad("expected a number, got '" + s + "'");
        }
    };
    if (d == "rank" || d == "exterior-cube-fixed") {
        want(2);
        number(w[1]);
    } else if (d == "jordan") {
        want(3);
        try {
            parse_jordan_notation(w[2], conductor);
        } catch (const ParseError& p) {
            bad(p.what());
        }
    } else if (d == "irreducible" || d == "g2-certificate") {
        want(2);
        if (!one_of(w[1], {"yes", "no"})) bad("expected yes or no");
    } else if (d == "form") {
        want(2);
        if (!one_of(w[1], {"symmetric", "alternating", "none"})) bad("expected symmetric, alternating or none");
    } else if (d == "group") {
        want(8);
        if (w[2] != "sum" || w[4] != "target" || w[6] != "rigid") bad("expected 'group NAME sum S target T rigid yes|no'");
        number(w[3]);
        number(w[5]);
        if (!one_of(w[7], {"yes", "no"})) bad("expected yes or no");
    } else if (d == "appendix") {
        want(2);
        if (!one_of(w[1], {"isomorphic", "none"})) bad("expected isomorphic or none");
    } else {
        bad("unknown directive '" + d + "'");
    }
}

std::string substitute(std::string_view text, long n, long q) {
    std::string out;
    for (size_t i = 0; i < text.size(); ++i) {
        if (text[i] != '{') {
            out += text[i];
            continue;
        }
        const size_t close = text.find('}', i);
        if (close == std::string_view::npos) throw Error(ErrorCode::InvariantViolation, "unterminated placeholder");
        const std::string key(text.substr(i + 1, close - i - 1));
        if (key == "N") {
            out += std::to_string(n);
        } else if (key == "zq") {
            out += "(z^" + std::to_string(n / q) + ")";
        } else if (key == "z3") {
            out += "(z^" + std::to_string(n / 3) + ")";
        } else {
            throw Error(ErrorCode::InvariantViolation, "unknown placeholder {" + key + "}");
        }
        i = close;
    }
    return out;
}

std::string indent(const std::string& block) {
    std::string out;
    std::istringstream is(block);
    for (std::string line; std::getline(is, line);) out += "  " + line + "\n";
    return out;
}

std::string upper(std::string s) {
    for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return s;
}

std::string verdict(const AnalysisReport& a) {
    const GroupSummary* best = nullptr;
    auto rank_of = [](const std::string& name) {
        if (name == "g2") return 0;
        if (name.rfind("so", 0) == 0 || name.rfind("sp", 0) == 0) return 1;
        return 2;
    };
    for (const auto& g : a.groups) {
        if (g.rigidity.rigid && (!best || rank_of(g.name) < rank_of(best->name))) best = &g;
    }
    return best ? upper(best->name) + "-rigid" : "not rigid";
}

struct Outcome {
    const MonodromyTuple& result;
    const AnalysisReport& analysis;
    std::optional<bool> appendix;  // nullopt when the shapes do not match
};

CheckResult check(const Expectation& e, const Outcome& o) {
    const auto& w = e.words;
    CheckResult r;
    std::string joined = "expect";
    for (const auto& word : w) joined += " " + word;
    r.description = joined;
    const auto& a = o.analysis;
    const std::string& d = w[0];
    auto yes = [](bool b) { return std::string(b ? "yes" : "no"); };

    if (d == "rank") {
        r.passed = std::to_string(a.rank) == w[1];
        r.detail = std::to_string(a.rank);
    } else if (d == "jordan") {
        const auto it = std::find(a.labels.begin(), a.labels.end(), w[1]);
        if (it == a.labels.end()) {
            r.detail = "no slot " + w[1];
        } else if (const auto& got = a.jordan[static_cast<size_t>(it - a.labels.begin())]; got.eigenvalues.empty()) {
            r.detail = "not quasi-unipotent";
        } else {
            const auto miss = detail::jordan_mismatch(got, parse_jordan_notation(w[2], a.conductor), a.conductor);
            r.passed = !miss;
            r.detail = miss.value_or("");
        }
    } else if (d == "irreducible") {
        r.passed = yes(a.irreducible) == w[1];
        r.detail = yes(a.irreducible);
    } else if (d == "form") {
        if (a.forms.empty()) {
            r.detail = "none";
        } else if (a.forms.size() > 1) {
            r.detail = std::to_string(a.forms.size()) + "-dimensional";
        } else {
            r.detail = std::string(symmetry_name(a.forms[0].symmetry)) +
                       (a.forms[0].nondegenerate ? " nondegenerate" : " degenerate");
        }
        r.passed = w[1] == "none" ? a.forms.empty() : r.detail == w[1] + " nondegenerate";
    } else if (d == "exterior-cube-fixed") {
        r.passed = std::to_string(a.exterior_fixed_dimension) == w[1];
        r.detail = std::to_string(a.exterior_fixed_dimension);
    } else if (d == "g2-certificate") {
        r.passed = yes(a.trivector.has_value()) == w[1];
        r.detail = yes(a.trivector.has_value());
    } else if (d == "group") {
        const auto it = std::find_if(a.groups.begin(), a.groups.end(), [&](const auto& g) { return g.name == w[1]; });
        if (it == a.groups.end()) {
            r.detail = "group not measured";
        } else {
            const auto& g = it->rigidity;
            r.detail = "sum " + std::to_string(g.sum) + " target " + std::to_string(g.target) + " rigid " + yes(g.rigid);
            r.passed = r.detail == w[2] + " " + w[3] + " " + w[4] + " " + w[5] + " " + w[6] + " " + w[7];
        }
    } else if (d == "appendix") {
        r.detail = !o.appendix ? "not applicable" : (*o.appendix ? "isomorphic" : "none");
        r.passed = r.detail == w[1];
    }
    if (r.passed) r.detail.clear();
    return r;
}

}  // namespace

std::vector<std::string> scenario_names() { return {"theorem1", "zeta6", "general-q"}; }

std::string_view scenario_source(std::string_view name) {
    if (name == "theorem1") return detail::kTheorem1Source;
    if (name == "zeta6") return detail::kZeta6Source;
    if (name == "general-q") return detail::kGeneralQSource;
    throw Error(ErrorCode::UnknownScenario, "no scenario named '" + std::string(name) + "'");
}

std::vector<std::pair<Cyclotomic, size_t>> parse_jordan_notation(std::string_view text, int conductor) {
    const std::string s = trim(text);
    std::vector<std::pair<Cyclotomic, size_t>> out;
    auto inside = [&](size_t open) {
        if (s.back() != ')') throw ParseError("expected ')' at the end", 1, s.size());
        return std::string_view(s).substr(open + 1, s.size() - open - 2);
    };
    if (s.rfind("J(", 0) == 0) {
        std::vector<size_t> offsets;
        const auto parts = split_top_level(inside(1), offsets);
        for (size_t i = 0; i < parts.size(); ++i) {
            out.emplace_back(Cyclotomic(1), parse_length(trim(parts[i]), offsets[i] + 3));
        }
    } else if (s.rfind("diag(", 0) == 0) {
        std::vector<size_t> offsets;
        const auto parts = split_top_level(inside(4), offsets);
        for (size_t i = 0; i < parts.size(); ++i) {
            try {
                out.emplace_back(parse_scalar(parts[i], conductor), 1);
            } catch (const ParseError& e) {
                throw ParseError(e.what(), 1, offsets[i] + 6 + e.column() - 1);
            }
        }
    } else if (s.rfind('[', 0) == 0) {
        size_t pos = 0;
        while (pos < s.size()) {
            const size_t end = std::min(s.find(';', pos), s.size());
            const std::string part = trim(std::string_view(s).substr(pos, end - pos));
            const size_t close = part.find(']');
            if (part.empty() || part[0] != '[' || close == std::string::npos) {
                throw ParseError("expected '[eigenvalue] lengths'", 1, pos + 1);
            }
            const Cyclotomic value = parse_scalar(part.substr(1, close - 1), conductor);
            const auto lengths = split_words(part.substr(close + 1));
            if (lengths.empty()) throw ParseError("missing block lengths", 1, pos + close + 2);
            for (const auto& l : lengths) out.emplace_back(value, parse_length(l, pos + 1));
            pos = end + 1;
        }
    } else {
        throw ParseError("expected J(...), diag(...) or [value] lengths", 1, 1);
    }
    if (out.empty()) throw ParseError("empty Jordan data", 1, 1);
    return out;
}

Scenario parse_scenario(std::string name, std::string_view text) {
    Scenario sc;
    sc.name = std::move(name);
    std::string blanked;
    size_t line_no = 0;
    for (size_t pos = 0; pos <= text.size();) {
        const size_t end = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, end - pos);
        ++line_no;
        const std::string t = trim(line);
        if (t == "expect" || t.rfind("expect ", 0) == 0 || t.rfind("expect\t", 0) == 0) {
            Expectation e;
            e.line = line_no;
            std::string rest = trim(std::string_view(t).substr(6));
            const auto comment = rest.find('#');
            if (comment != std::string::npos) rest = trim(rest.substr(0, comment));
            e.words = split_words(rest);
            if (e.words.size() > 2 && e.words[0] == "jordan") {
                // the notation may contain spaces: keep the tail whole
                const size_t label_at = rest.find(e.words[1], 6);
                e.words = {"jordan", e.words[1], trim(rest.substr(label_at + e.words[1].size()))};
            }
            sc.expectations.push_back(std::move(e));
        } else {
            blanked += line;
        }
        if (end < text.size()) blanked += '\n';
        pos = end + 1;
    }
    sc.source = std::string(text);
    sc.pipeline = parse_pipeline(blanked);
    for (const auto& e : sc.expectations) validate(e, sc.pipeline.conductor);
    return sc;
}

Scenario load_scenario(std::string_view name, const ScenarioParams& params) {
    const std::string_view source = scenario_source(name);
    if (name != "general-q") {
        if (!params.empty()) {
            throw Error(ErrorCode::InvalidParameter, "scenario '" + std::string(name) + "' takes no parameters");
        }
        return parse_scenario(std::string(name), source);
    }
    long q = 4;
    for (const auto& [key, value] : params) {
        if (key != "q") throw Error(ErrorCode::InvalidParameter, "unknown parameter '" + key + "'");
        q = value;
    }
    if (q < 2) throw Error(ErrorCode::InvalidParameter, "q must be at least 2, got " + std::to_string(q));
    if (q > 1000) throw Error(ErrorCode::InvalidParameter, "q = " + std::to_string(q) + " is too large");
    Scenario sc = parse_scenario(std::string(name), substitute(source, std::lcm(3L, q), q));
    sc.params = {{"q", q}};
    sc.experimental = q <= 3;
    return sc;
}

ScenarioRun run_scenario(const Scenario& scenario) {
    ScenarioRun run;
    std::ostringstream os;
    os << "scenario " << scenario.name << '\n';
    for (const auto& [key, value] : scenario.params) os << "parameter " << key << " = " << value << '\n';
    if (scenario.experimental) os << "experimental parameter outside the range q > 3\n";
    os << "expression\n" << indent(format_pipeline(scenario.pipeline));

    try {
        const Evaluation ev = evaluate(scenario.pipeline);
        os << "trace\n" << indent(format_trace(ev.trace, scenario.pipeline.conductor));
        for (const auto& w : ev.result.warnings()) os << "warning " << w << '\n';

        const AnalysisReport analysis = analyze(ev.result);
        os << "analysis\n" << indent(format_report(analysis));

        std::optional<bool> appendix;
        const MonodromyTuple fixture = appendix_tuple();
        if (ev.result.rank() == fixture.rank() && ev.result.labels() == fixture.labels()) {
            appendix = find_intertwiner(ev.result, fixture).has_value();
            os << "appendix-intertwiner " << (*appendix ? "found" : "none") << '\n';
        } else {
            os << "appendix-intertwiner not applicable\n";
        }
        os << "verdict " << verdict(analysis) << '\n';

        const Outcome outcome{ev.result, analysis, appendix};
        for (const auto& e : scenario.expectations) run.checks.push_back(check(e, outcome));
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        os << "error " << e.what() << '\n' << "status evaluation-error\n";
        run.exit_code = ExitEvaluation;
        run.report = os.str();
        return run;
    }

    if (!run.checks.empty()) os << "expectations\n" << indent(format_checks(run.checks));
    const bool all = std::all_of(run.checks.begin(), run.checks.end(), [](const auto& c) { return c.passed; });
    run.exit_code = all ? ExitOk : ExitMismatch;
    os << "status " << (all ? "ok" : "mismatch") << '\n';
    run.report = os.str();
    return run;
}

ScenarioRun run_scenario(std::string_view name, const ScenarioParams& params) {
    return run_scenario(load_scenario(name, params));
}

std::string format_checks(const std::vector<CheckResult>& checks) {
    std::string out;
    for (const auto& c : checks) {
        out += (c.passed ? "pass " : "fail ") + c.description;
        if (!c.passed && !c.detail.empty()) out += " (found " + c.detail + ")";
        out += '\n';
    }
    return out;
}

}  // namespace rls
