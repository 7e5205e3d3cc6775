#include "g1cc/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <optional>
#include <set>
#include <sstream>

#include <json.hpp>

namespace g1cc {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string& s) {
    std::vector<std::string> tokens;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

Integer parse_int(const std::string& tok, int line) {
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(line, "expected an integer, got '" + tok + "'");
    return value;
}

// One record block under construction.
struct Block {
    int start_line;
    std::string name;
    std::optional<KnotSource> source;  // seifert | pretzel | whitehead
    std::optional<Integer> det;
    bool two_bridge = false;
    bool fibered = false;
    std::string note;

    void set_source(KnotSource src, int line) {
        if (source) throw ParseError(line, "duplicate source for knot '" + name + "'");
        source = std::move(src);
    }

    KnotRecord finish(int line) const {
        KnotRecord rec;
        rec.name = name;
        if (source) {
            rec.source = *source;
            rec.declared_det = det;
        } else if (det) {
            rec.source = DeterminantOnly{*det};
        } else {
            throw ParseError(line, "knot '" + name + "' has no data source");
        }
        rec.two_bridge = two_bridge;
        rec.fibered = fibered;
        rec.note = note;
        return rec;
    }
};

}  // namespace

std::vector<KnotRecord> parse_catalog(std::istream& in) {
    std::vector<KnotRecord> records;
    std::set<std::string> names;
    std::optional<Block> block;
    std::string raw;
    int line = 0;

    while (std::getline(in, raw)) {
        ++line;
        const std::string text = trim(raw);
        if (text.empty() || text.front() == '#') continue;

        if (!block) {
            if (text.rfind("knot", 0) == 0 &&
                (text.size() == 4 || std::isspace(static_cast<unsigned char>(text[4])))) {
                const std::string name = trim(text.substr(4));
                if (name.empty()) throw ParseError(line, "missing knot name");
                if (!names.insert(name).second)
                    throw ParseError(line, "duplicate knot name '" + name + "'");
                block = Block{line, name, {}, {}, false, false, ""};
            } else {
                throw ParseError(line, "expected 'knot <name>', got '" + split(text)[0] + "'");
            }
            continue;
        }

        const std::vector<std::string> tok = split(text);
        const std::string& kw = tok[0];

        if (kw == "end") {
            if (tok.size() != 1) throw ParseError(line, "'end' takes no arguments");
            records.push_back(block->finish(line));
            block.reset();
        } else if (kw == "seifert") {
            if (tok.size() < 2) throw ParseError(line, "seifert needs a dimension");
            const Integer dim = parse_int(tok[1], line);
            if (dim < 1 || dim > 8)
                throw ParseError(line, "seifert dimension must be between 1 and 8");
            const int n = static_cast<int>(dim.value());
            if (static_cast<int>(tok.size()) != 2 + n * n)
                throw ParseError(line, "seifert " + std::to_string(n) + " needs " +
                                           std::to_string(n * n) + " entries, got " +
                                           std::to_string(tok.size() - 2));
            std::vector<Integer> entries;
            for (int k = 0; k < n * n; ++k) entries.push_back(parse_int(tok[2 + k], line));
            try {
                block->set_source(SeifertMatrix(IntMatrix(n, std::move(entries))), line);
            } catch (const ParseError&) {
                throw;
            } catch (const std::exception& e) {
                throw ParseError(line, e.what());
            }
        } else if (kw == "pretzel") {
            if (tok.size() != 4) throw ParseError(line, "pretzel needs exactly 3 parameters");
            const Integer p = parse_int(tok[1], line);
            const Integer q = parse_int(tok[2], line);
            const Integer r = parse_int(tok[3], line);
            if (is_even(p) || is_even(q) || is_even(r))
                throw ParseError(line, "pretzel parameters must be odd");
            block->set_source(PretzelParams(p, q, r), line);
        } else if (kw == "whitehead") {
            if (tok.size() != 3) throw ParseError(line, "whitehead needs a clasp and a twist");
            Clasp clasp;
            if (tok[1] == "+") clasp = Clasp::Positive;
            else if (tok[1] == "-") clasp = Clasp::Negative;
            else throw ParseError(line, "whitehead clasp must be '+' or '-'");
            block->set_source(WhiteheadParams{clasp, parse_int(tok[2], line)}, line);
        } else if (kw == "det") {
            if (tok.size() != 2) throw ParseError(line, "det needs exactly 1 value");
            const Integer d = parse_int(tok[1], line);
            if (d < 0) throw ParseError(line, "determinant must be nonnegative");
            if (block->det) throw ParseError(line, "duplicate det for knot '" + block->name + "'");
            block->det = d;
        } else if (kw == "flag") {
            if (tok.size() != 2) throw ParseError(line, "flag needs exactly 1 name");
            if (tok[1] == "two_bridge") block->two_bridge = true;
            else if (tok[1] == "fibered") block->fibered = true;
            else throw ParseError(line, "unknown flag '" + tok[1] + "'");
        } else if (kw == "note") {
            const std::string body = trim(text.substr(4));
            if (block->note.empty()) block->note = body;
            else block->note += "; " + body;
        } else if (kw == "knot") {
            throw ParseError(line, "missing 'end' before new 'knot'");
        } else {
            throw ParseError(line, "unknown keyword '" + kw + "'");
        }
    }
    if (block) throw ParseError(line, "missing 'end' for knot '" + block->name + "'");
    return records;
}

std::vector<KnotRecord> builtin_table1() {
    struct Row {
        const char* name;
        long long det;
    };
    // Determinants of the genus-one knots with at most 12 crossings.
    static const Row rows[] = {
        {"3_1", 3},      {"4_1", 5},      {"5_2", 7},      {"6_1", 9},      {"7_2", 11},
        {"7_4", 15},     {"8_1", 13},     {"8_3", 17},     {"9_2", 15},     {"9_5", 23},
        {"9_35", 27},    {"9_46", 9},     {"10_1", 17},    {"10_3", 25},    {"11a247", 19},
        {"11a343", 31},  {"11a362", 39},  {"11a363", 35},  {"11n139", 9},   {"11n141", 21},
        {"12a803", 21},  {"12a1166", 33}, {"12a1287", 37},
    };

    std::vector<KnotRecord> records;
    for (const Row& row : rows) {
        KnotRecord rec;
        rec.name = row.name;
        rec.source = DeterminantOnly{row.det};
        records.push_back(std::move(rec));
    }
    auto find = [&](const char* name) -> KnotRecord& {
        return *std::find_if(records.begin(), records.end(),
                             [&](const KnotRecord& r) { return r.name == name; });
    };
    find("6_1").two_bridge = true;
    find("10_3").two_bridge = true;
    // 9_46 = P(3,3,-3) and 11n139 = P(-5,3,-3); the tabulated determinant
    // stays as a declared cross-check.
    for (auto [name, p, q, r] : {std::tuple{"9_46", 3, 3, -3}, std::tuple{"11n139", -5, 3, -3}}) {
        KnotRecord& rec = find(name);
        rec.declared_det = std::get<DeterminantOnly>(rec.source).det;
        rec.source = PretzelParams(p, q, r);
    }
    return records;
}

AnalysisResult analyze(const std::vector<KnotRecord>& records) {
    AnalysisResult result;
    for (const KnotRecord& rec : records) {
        try {
            result.reports.push_back(combined_verdict(rec));
        } catch (const std::exception& e) {
            result.errors.push_back({rec.name, e.what()});
        }
    }
    return result;
}

namespace {

int count_verdicts(const AnalysisResult& result, Verdict v) {
    return static_cast<int>(std::count_if(
        result.reports.begin(), result.reports.end(),
        [&](const ObstructionReport& r) { return r.verdict == v; }));
}

std::string render_text(const AnalysisResult& result) {
    std::ostringstream out;

    // Pad by code points, not bytes, so "Z/3 ⊕ Z/3" lines up.
    auto width = [](const std::string& s) {
        std::size_t w = 0;
        for (unsigned char ch : s) w += (ch & 0xC0) != 0x80;
        return w;
    };
    auto pad = [&](const std::string& s, std::size_t w) {
        return s + std::string(w > width(s) ? w - width(s) : 0, ' ');
    };
    auto lpad = [&](const std::string& s, std::size_t w) {
        return std::string(w > width(s) ? w - width(s) : 0, ' ') + s;
    };

    std::size_t name_w = 4, det_w = 3, h_w = 7;
    for (const ObstructionReport& r : result.reports) {
        name_w = std::max(name_w, width(r.knot));
        if (r.determinant) det_w = std::max(det_w, width(to_string(*r.determinant)));
        if (r.homology) h_w = std::max(h_w, width(to_string(*r.homology)));
    }

    out << pad("name", name_w) << "  " << lpad("det", det_w) << "  " << pad("H1(Y_K)", h_w)
        << "  verdict\n";
    for (const ObstructionReport& r : result.reports) {
        out << pad(r.knot, name_w) << "  "
            << lpad(r.determinant ? to_string(*r.determinant) : "-", det_w) << "  "
            << pad(r.homology ? to_string(*r.homology) : "-", h_w) << "  "
            << to_string(r.verdict) << "\n";
    }

    for (const ObstructionReport& r : result.reports) {
        out << "\n" << r.knot << "\n";
        if (r.determinant) out << "  determinant = " << *r.determinant << "\n";
        if (r.alexander) out << "  Delta = " << *r.alexander << "\n";
        if (r.homology) out << "  H1(Y_K) = " << *r.homology << "\n";
        if (r.signature) out << "  signature = " << *r.signature << "\n";
        for (const std::string& w : r.warnings) out << "  warning: " << w << "\n";
        out << "  outcomes:\n";
        for (const TestOutcome& o : r.outcomes)
            out << "    [" << to_string(o.status) << "] " << o.test << ": " << o.reason << "\n";
        out << "  verdict: " << to_string(r.verdict) << "\n";
    }

    if (!result.errors.empty()) {
        out << "\nerrors:\n";
        for (const RecordError& e : result.errors)
            out << "  " << e.knot << ": " << e.message << "\n";
    }

    out << "\nsummary: " << result.reports.size() + result.errors.size() << " knots, "
        << count_verdicts(result, Verdict::NoCosmeticCrossings) << " NO_COSMETIC_CROSSINGS, "
        << count_verdicts(result, Verdict::Unresolved) << " UNRESOLVED";
    if (!result.errors.empty()) out << ", " << result.errors.size() << " errors";
    out << "\n";
    return out.str();
}

nlohmann::ordered_json witness_json(const TestWitness& w) {
    using nlohmann::ordered_json;
    if (const auto* slice = std::get_if<SliceWitness>(&w))
        return ordered_json{{"b", slice->b.value()},
                            {"f", to_string(slice->f)},
                            {"m", slice->m.value()}};
    if (const auto* group = std::get_if<AbelianGroup>(&w))
        return ordered_json{{"group", to_string(*group)}};
    if (const auto* d = std::get_if<Integer>(&w)) return ordered_json{{"d", d->value()}};
    return nullptr;
}

std::string render_json(const AnalysisResult& result) {
    using nlohmann::ordered_json;
    ordered_json root;
    root["reports"] = ordered_json::array();
    for (const ObstructionReport& r : result.reports) {
        ordered_json jr;
        jr["name"] = r.knot;
        jr["determinant"] = r.determinant ? ordered_json(r.determinant->value()) : nullptr;
        jr["alexander"] = r.alexander ? ordered_json(to_string(*r.alexander)) : nullptr;
        jr["homology"] = r.homology ? ordered_json(to_string(*r.homology)) : nullptr;
        jr["signature"] = r.signature ? ordered_json(*r.signature) : nullptr;
        jr["outcomes"] = ordered_json::array();
        for (const TestOutcome& o : r.outcomes)
            jr["outcomes"].push_back(ordered_json{{"test", o.test},
                                                  {"status", to_string(o.status)},
                                                  {"reason", o.reason},
                                                  {"witness", witness_json(o.witness)}});
        jr["verdict"] = to_string(r.verdict);
        jr["warnings"] = r.warnings;
        root["reports"].push_back(std::move(jr));
    }
    root["errors"] = ordered_json::array();
    for (const RecordError& e : result.errors)
        root["errors"].push_back(ordered_json{{"knot", e.knot}, {"message", e.message}});
    root["summary"] = ordered_json{
        {"knots", result.reports.size() + result.errors.size()},
        {"no_cosmetic_crossings", count_verdicts(result, Verdict::NoCosmeticCrossings)},
        {"unresolved", count_verdicts(result, Verdict::Unresolved)},
        {"errors", result.errors.size()}};
    return root.dump(2) + "\n";
}

}  // namespace

std::string render(const AnalysisResult& result, RenderFormat format) {
    return format == RenderFormat::Json ? render_json(result) : render_text(result);
}

}  // namespace g1cc
