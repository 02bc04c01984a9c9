// Command-line front end: spectrum, tables, certify, counting, selftest.
// Exit codes: 0 success, 2 usage, 3 precondition violation, 4 verification
// mismatch or internal inconsistency.

#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fwcodes/codes.hpp"
#include "fwcodes/counting.hpp"
#include "fwcodes/errors.hpp"
#include "fwcodes/optimality.hpp"
#include "fwcodes/selfcheck.hpp"
#include "fwcodes/simplicial.hpp"
#include "fwcodes/spectra.hpp"
#include "fwcodes/subsets.hpp"

namespace {

using nlohmann::ordered_json;
using namespace fwc;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<int> mask_elements(const SubsetMask& mask) {
    std::vector<int> out;
    for (int i = 0; i < mask.m; ++i)
        if (mask.bits & (std::uint32_t{1} << i)) out.push_back(i + 1);
    return out;
}

ordered_json complex_to_json(const SimplicialComplex& complex) {
    ordered_json faces = ordered_json::array();
    for (const auto& face : complex.maximal()) faces.push_back(mask_elements(face));
    return ordered_json{{"m", complex.ambient_dim()}, {"maximal", faces}};
}

SimplicialComplex complex_from_json(int m, const std::string& text) {
    ordered_json parsed;
    try {
        parsed = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw UsageError(std::string("complex is not valid JSON: ") + e.what());
    }
    if (!parsed.is_object() || !parsed.contains("m") || !parsed.contains("maximal"))
        throw UsageError("complex must be an object {\"m\":..., \"maximal\":[[...],...]}");
    if (!parsed["m"].is_number_integer() || parsed["m"].get<int>() != m)
        throw UsageError("complex field \"m\" must equal --m");
    if (!parsed["maximal"].is_array()) throw UsageError("complex field \"maximal\" must be a list");
    std::vector<SubsetMask> faces;
    for (const auto& face : parsed["maximal"]) {
        if (!face.is_array()) throw UsageError("each maximal face must be an element list");
        std::vector<int> elems;
        for (const auto& e : face) {
            if (!e.is_number_integer()) throw UsageError("face elements must be integers");
            elems.push_back(e.get<int>());
        }
        try {
            faces.push_back(subset_of(m, elems));
        } catch (const Error& err) {
            throw UsageError(err.what());
        }
    }
    return SimplicialComplex::from_maximal(m, faces);
}

SubsetMask subset_from_text(int m, const std::string& text) {
    try {
        return parse_subset(m, text);
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
}

std::string dist_text(const WeightDistribution& dist) {
    std::ostringstream out;
    out << "{";
    bool first = true;
    for (auto [w, f] : dist.entries()) {
        if (!first) out << ", ";
        first = false;
        out << w << ":" << f;
    }
    out << "}";
    return out.str();
}

ordered_json dist_json(const WeightDistribution& dist) {
    ordered_json rows = ordered_json::array();
    for (auto [w, f] : dist.entries())
        rows.push_back(ordered_json{{"weight", w}, {"frequency", f}});
    return rows;
}

void emit_json(const ordered_json& doc) { std::cout << doc.dump(2) << "\n"; }

// ---- shared code-construction plumbing ------------------------------------

struct CodeInputs {
    int m = 0;
    Family family = Family::L1;
    SimplicialComplex d1 = SimplicialComplex::empty(1);
    std::optional<SimplicialComplex> d2;
};

struct CodeOptions {
    int m = 0;
    std::string family_text;
    std::optional<std::string> a_text, b_text, complex1_text, complex2_text;
    std::string method = "auto";
    std::string format = "text";
    int threads = 0;

    void register_on(CLI::App* cmd, bool with_method = true) {
        cmd->add_option("--m", m, "ambient dimension m (1..30)")->required();
        cmd->add_option("--family", family_text, "code family: L1, L2 or L2plain")
            ->required()
            ->check(CLI::IsMember({"L1", "L2", "L2plain"}));
        cmd->add_option("--A", a_text,
                        "elements of A, e.g. \"1,3\" or \"{}\" (single-face complex)");
        cmd->add_option("--B", b_text, "elements of B (single-face complex)");
        cmd->add_option("--complex1", complex1_text,
                        "first complex as JSON {\"m\":3,\"maximal\":[[1,2],[2,3]]}");
        cmd->add_option("--complex2", complex2_text, "second complex as JSON");
        if (with_method)
            cmd->add_option("--method", method, "spectrum method")
                ->check(CLI::IsMember({"auto", "closed", "charsum", "bruteforce"}));
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json", "csv"}));
        cmd->add_option("--threads", threads, "worker threads (0 = hardware)");
    }

    CodeInputs build_inputs() const {
        CodeInputs in;
        in.m = m;
        in.family = parse_family(family_text);
        if (a_text && complex1_text) throw UsageError("give --A or --complex1, not both");
        if (!a_text && !complex1_text) throw UsageError("the first complex is required: --A or --complex1");
        in.d1 = a_text ? SimplicialComplex::generated_by(subset_from_text(m, *a_text))
                       : complex_from_json(m, *complex1_text);
        if (in.family == Family::L2Plain) {
            if (b_text || complex2_text)
                throw UsageError("family L2plain takes no second complex (--B/--complex2)");
        } else {
            if (b_text && complex2_text) throw UsageError("give --B or --complex2, not both");
            if (!b_text && !complex2_text)
                throw UsageError("the second complex is required: --B or --complex2");
            in.d2 = b_text ? SimplicialComplex::generated_by(subset_from_text(m, *b_text))
                           : complex_from_json(m, *complex2_text);
        }
        return in;
    }
};

DefiningSet build_set(const CodeInputs& in) {
    switch (in.family) {
        case Family::L1: return make_l1(in.d1, *in.d2);
        case Family::L2: return make_l2(in.d1, *in.d2);
        case Family::L2Plain: return make_l2_plain(in.d1);
    }
    throw InternalError("unknown family");
}

// Size parameters when every complex has a single maximal face and the sizes
// lie in the regime the closed forms cover; otherwise nothing.
std::optional<SpectrumParams> closed_params(const CodeInputs& in) {
    if (!in.d1.has_single_maximal()) return std::nullopt;
    const SubsetMask face_a = in.d1.maximal().front();
    const int m = in.m;
    if (in.family == Family::L2Plain) {
        const int a = face_a.size();
        if (a < 1 || a > m - 1) return std::nullopt;
        return SpectrumParams(m, a, 0, a);
    }
    if (!in.d2 || !in.d2->has_single_maximal()) return std::nullopt;
    const auto params = SpectrumParams::from_sets(face_a, in.d2->maximal().front());
    if (params.size_b < 1 || params.size_b > m - 1) return std::nullopt;
    if (in.family == Family::L2 && (params.size_a < 1 || params.size_a > m - 1))
        return std::nullopt;
    return params;
}

WeightDistribution closed_form(const CodeInputs& in, const SpectrumParams& params) {
    switch (in.family) {
        case Family::L1: return closed_form_l1(params);
        case Family::L2: return closed_form_l2(params);
        case Family::L2Plain: return closed_form_l2_plain(params.m, params.size_a);
    }
    throw InternalError("unknown family");
}

WeightDistribution charsum_form(const CodeInputs& in, const DefiningSet& set, int threads) {
    return in.family == Family::L2Plain
               ? lee_spectrum_charsum(set, in.family, in.d1, std::nullopt, threads)
               : lee_spectrum_charsum(set, in.family, in.d1, in.d2, threads);
}

std::string resolve_method(const CodeInputs& in, const std::string& requested) {
    if (requested != "auto") return requested;
    if (closed_params(in)) return "closed";
    if (in.m <= kMaxBruteforceDim) return "bruteforce";
    throw PreconditionError(
        "no closed form applies to these complexes and exhaustive enumeration supports m <= " +
        std::to_string(kMaxBruteforceDim) + " (got m=" + std::to_string(in.m) +
        "); rerun with --method charsum (supported for m <= " + std::to_string(kMaxCharsumDim) +
        ")");
}

WeightDistribution message_distribution(const CodeInputs& in, const DefiningSet& set,
                                        const std::string& method, int threads) {
    if (method == "closed") {
        const auto params = closed_params(in);
        if (!params)
            throw PreconditionError(
                "no closed form applies: every complex must have a single maximal face with "
                "sizes in the supported range");
        return closed_form(in, *params);
    }
    if (method == "charsum") return charsum_form(in, set, threads);
    if (method == "bruteforce") return lee_spectrum_bruteforce(set, threads);
    throw InternalError("unknown method " + method);
}

// ---- spectrum --------------------------------------------------------------

struct SpectrumOutput {
    const CodeInputs& in;
    const DefiningSet& set;
    std::string method;
    std::string mode;
    WeightDistribution shown;  // message- or distinct-indexed per mode
    std::uint64_t total = 0;
    std::uint64_t kernel = 0;
    std::uint64_t code_size = 0;
    std::optional<std::string> verify_note;
};

void print_spectrum_text(const SpectrumOutput& out) {
    std::cout << "command: spectrum\n";
    std::cout << "family: " << to_string(out.in.family) << "\n";
    std::cout << "m: " << out.in.m << "\n";
    std::cout << "complex1: " << complex_to_json(out.in.d1).dump() << "\n";
    if (out.in.d2) std::cout << "complex2: " << complex_to_json(*out.in.d2).dump() << "\n";
    std::cout << "length: " << out.set.size() << "\n";
    std::cout << "binary-length: " << 2 * out.set.size() << "\n";
    std::cout << "method: " << out.method << "\n";
    std::cout << "mode: " << out.mode << "\n";
    std::cout << "kernel-size: " << out.kernel << "\n";
    std::cout << "code-size: " << out.code_size << "\n";
    std::cout << "distribution:\n";
    for (auto [w, f] : out.shown.entries()) std::cout << "  " << w << ": " << f << "\n";
    std::cout << "enumerator: " << out.shown.enumerator() << "\n";
    if (out.verify_note) std::cout << "verify: " << *out.verify_note << "\n";
}

void print_spectrum_json(const SpectrumOutput& out) {
    ordered_json doc{{"command", "spectrum"},
                     {"family", to_string(out.in.family)},
                     {"m", out.in.m},
                     {"complex1", complex_to_json(out.in.d1)}};
    if (out.in.d2) doc["complex2"] = complex_to_json(*out.in.d2);
    doc["length"] = out.set.size();
    doc["binary_length"] = 2 * out.set.size();
    doc["method"] = out.method;
    doc["mode"] = out.mode;
    doc["kernel_size"] = out.kernel;
    doc["code_size"] = out.code_size;
    doc["distribution"] = dist_json(out.shown);
    doc["enumerator"] = out.shown.enumerator();
    if (out.verify_note) doc["verify"] = *out.verify_note;
    emit_json(doc);
}

void print_spectrum_csv(const SpectrumOutput& out) {
    std::cout << "# spectrum family=" << to_string(out.in.family) << " m=" << out.in.m
              << " complex1=" << complex_to_json(out.in.d1).dump();
    if (out.in.d2) std::cout << " complex2=" << complex_to_json(*out.in.d2).dump();
    std::cout << " length=" << out.set.size() << " method=" << out.method
              << " mode=" << out.mode << " kernel=" << out.kernel
              << " size=" << out.code_size << "\n";
    std::cout << "weight,frequency\n";
    for (auto [w, f] : out.shown.entries()) std::cout << w << "," << f << "\n";
}

int cmd_spectrum(const CodeOptions& opts, const std::string& mode, bool verify) {
    const CodeInputs in = opts.build_inputs();
    const DefiningSet set = build_set(in);
    const std::string method = resolve_method(in, opts.method);
    const WeightDistribution message = message_distribution(in, set, method, opts.threads);

    std::optional<std::string> verify_note;
    if (verify) {
        std::vector<std::string> agreed{method};
        for (const std::string& other : {"closed", "charsum", "bruteforce"}) {
            if (other == method) continue;
            if (other == "closed" && !closed_params(in)) continue;
            if (other == "charsum" && in.m > kMaxCharsumDim) continue;
            if (other == "bruteforce" && in.m > kMaxBruteforceDim) continue;
            const auto alt = message_distribution(in, set, other, opts.threads);
            if (alt != message)
                throw VerificationError("method " + other + " gives " + dist_text(alt) +
                                        " but " + method + " gives " + dist_text(message));
            agreed.push_back(other);
        }
        if (agreed.size() == 1) {
            verify_note = "only one method applicable (" + method + ")";
        } else {
            std::string names;
            for (const auto& n : agreed) names += (names.empty() ? "" : ", ") + n;
            verify_note = "ok (" + names + " agree)";
        }
    }

    SpectrumOutput out{in, set, method, mode, WeightDistribution{}, 0, 0, 0, verify_note};
    out.total = message.total();
    out.kernel = message.frequency(0);
    if (out.kernel == 0 || out.total % out.kernel != 0)
        throw InternalError("kernel size does not divide the message count");
    out.code_size = out.total / out.kernel;
    out.shown = (mode == "distinct") ? message.scaled_down(out.kernel) : message;

    if (opts.format == "json")
        print_spectrum_json(out);
    else if (opts.format == "csv")
        print_spectrum_csv(out);
    else
        print_spectrum_text(out);
    return 0;
}

// ---- tables ----------------------------------------------------------------

struct TableRow {
    std::string family_label;
    int size_a, size_b, size_union;
    WeightDistribution closed;
    bool verified = false;
};

// Re-derives every closed-form distribution at concrete realizations of the
// size profile and checks it against enumeration and character sums.
std::vector<TableRow> sweep_tables(int m, int threads) {
    if (m > 6)
        throw PreconditionError("tables supports m <= 6 (got m=" + std::to_string(m) +
                                "); larger m would enumerate 2^{2m} messages per row");
    std::vector<TableRow> rows;
    auto add_row = [&](const std::string& label, Family family, int a, int b, int c,
                       const WeightDistribution& closed) {
        const auto [set_a, set_b] = realize_sizes(m, a, b, c);
        const auto d1 = SimplicialComplex::generated_by(set_a);
        const auto d2 = SimplicialComplex::generated_by(set_b);
        CodeInputs in;
        in.m = m;
        in.family = family;
        in.d1 = d1;
        if (family != Family::L2Plain) in.d2 = d2;
        const auto set = build_set(in);
        const bool ok = closed == lee_spectrum_bruteforce(set, threads) &&
                        closed == charsum_form(in, set, threads);
        rows.push_back(TableRow{label, a, b, c, closed, ok});
    };

    for (int a = 0; a <= m; ++a)
        for (int b = 1; b <= m - 1; ++b)
            for (int c = std::max(a, b); c <= std::min(m, a + b); ++c)
                add_row("L1", Family::L1, a, b, c, closed_form_l1(SpectrumParams(m, a, b, c)));
    for (int b = 1; b <= m - 1; ++b)
        add_row("L1-u-only", Family::L1, 0, b, b, closed_form_l1_u_only(m, b));
    for (int b = 1; b <= m - 1; ++b)
        add_row("L1-full", Family::L1, m, b, m, closed_form_l1_full(m, b));
    for (int a = 1; a <= m - 1; ++a)
        for (int b = 1; b <= m - 1; ++b)
            for (int c = std::max(a, b); c <= std::min(m, a + b); ++c)
                add_row("L2", Family::L2, a, b, c, closed_form_l2(SpectrumParams(m, a, b, c)));
    for (int a = 1; a <= m - 1; ++a)
        add_row("L2plain", Family::L2Plain, a, 0, a, closed_form_l2_plain(m, a));
    if (m >= 2)
        add_row("L2plain-corank1", Family::L2Plain, m - 1, 0, m - 1,
                closed_form_l2_plain_corank1(m));
    return rows;
}

int cmd_tables(int m, const std::string& format, int threads) {
    const auto rows = sweep_tables(m, threads);
    bool all_ok = true;
    for (const auto& r : rows) all_ok = all_ok && r.verified;

    if (format == "json") {
        ordered_json doc{{"command", "tables"}, {"m", m}};
        ordered_json list = ordered_json::array();
        for (const auto& r : rows)
            list.push_back(ordered_json{{"family", r.family_label},
                                        {"size_a", r.size_a},
                                        {"size_b", r.size_b},
                                        {"size_union", r.size_union},
                                        {"distribution", dist_json(r.closed)},
                                        {"verified", r.verified}});
        doc["rows"] = list;
        doc["all_verified"] = all_ok;
        emit_json(doc);
    } else if (format == "csv") {
        std::cout << "# tables m=" << m << "\n";
        std::cout << "family,size_a,size_b,size_union,weight,frequency,verified\n";
        for (const auto& r : rows)
            for (auto [w, f] : r.closed.entries())
                std::cout << r.family_label << "," << r.size_a << "," << r.size_b << ","
                          << r.size_union << "," << w << "," << f << ","
                          << (r.verified ? "ok" : "MISMATCH") << "\n";
    } else {
        std::cout << "command: tables\nm: " << m << "\n";
        for (const auto& r : rows) {
            std::cout << r.family_label << " |A|=" << r.size_a;
            if (r.family_label.rfind("L2plain", 0) != 0) std::cout << " |B|=" << r.size_b;
            std::cout << " |A∪B|=" << r.size_union << ": " << dist_text(r.closed) << " "
                      << (r.verified ? "ok" : "MISMATCH") << "\n";
        }
        std::cout << "rows: " << rows.size() << "\n";
        std::cout << "all-verified: " << (all_ok ? "yes" : "NO") << "\n";
    }
    if (!all_ok) throw VerificationError("closed forms disagree with the oracles");
    return 0;
}

// ---- certify ---------------------------------------------------------------

int cmd_certify(const CodeOptions& opts) {
    const CodeInputs in = opts.build_inputs();
    const DefiningSet set = build_set(in);
    const std::string method = resolve_method(in, opts.method);
    const WeightDistribution message = message_distribution(in, set, method, opts.threads);
    const std::uint64_t kernel = message.frequency(0);
    const OptimalityReport report = certify(message, set.size(), kernel);
    const bool external = !report.distance_optimal_griesmer;
    const char* annotation =
        "certificate inconclusive; optimality beyond it requires external code tables";

    if (opts.format == "json") {
        ordered_json doc{{"command", "certify"},
                         {"family", to_string(in.family)},
                         {"m", in.m},
                         {"complex1", complex_to_json(in.d1)}};
        if (in.d2) doc["complex2"] = complex_to_json(*in.d2);
        doc["length"] = set.size();
        doc["method"] = method;
        doc["n"] = report.params.n;
        doc["k"] = report.params.k;
        doc["d"] = report.params.d;
        doc["griesmer_sum_d"] = report.griesmer_sum_d;
        doc["griesmer_sum_d_plus_1"] = report.griesmer_sum_d_plus_1;
        doc["meets_griesmer"] = report.meets_griesmer;
        doc["distance_optimal_griesmer"] = report.distance_optimal_griesmer;
        if (external) doc["annotation"] = "external";
        emit_json(doc);
    } else if (opts.format == "csv") {
        std::cout << "# certify family=" << to_string(in.family) << " m=" << in.m
                  << " complex1=" << complex_to_json(in.d1).dump();
        if (in.d2) std::cout << " complex2=" << complex_to_json(*in.d2).dump();
        std::cout << " method=" << method << "\n";
        std::cout << "key,value\n";
        std::cout << "n," << report.params.n << "\n";
        std::cout << "k," << report.params.k << "\n";
        std::cout << "d," << report.params.d << "\n";
        std::cout << "griesmer_sum_d," << report.griesmer_sum_d << "\n";
        std::cout << "griesmer_sum_d_plus_1," << report.griesmer_sum_d_plus_1 << "\n";
        std::cout << "meets_griesmer," << (report.meets_griesmer ? "true" : "false") << "\n";
        std::cout << "distance_optimal_griesmer,"
                  << (report.distance_optimal_griesmer ? "true" : "false") << "\n";
        if (external) std::cout << "annotation,external\n";
    } else {
        std::cout << "command: certify\n";
        std::cout << "family: " << to_string(in.family) << "\n";
        std::cout << "m: " << in.m << "\n";
        std::cout << "complex1: " << complex_to_json(in.d1).dump() << "\n";
        if (in.d2) std::cout << "complex2: " << complex_to_json(*in.d2).dump() << "\n";
        std::cout << "length: " << set.size() << "\n";
        std::cout << "method: " << method << "\n";
        std::cout << "n: " << report.params.n << "\n";
        std::cout << "k: " << report.params.k << "\n";
        std::cout << "d: " << report.params.d << "\n";
        std::cout << "griesmer-sum(k,d): " << report.griesmer_sum_d << "\n";
        std::cout << "griesmer-sum(k,d+1): " << report.griesmer_sum_d_plus_1 << "\n";
        std::cout << "meets-griesmer: " << (report.meets_griesmer ? "true" : "false") << "\n";
        std::cout << "distance-optimal-griesmer: "
                  << (report.distance_optimal_griesmer ? "true" : "false") << "\n";
        if (external) std::cout << "annotation: external (" << annotation << ")\n";
    }
    return 0;
}

// ---- counting --------------------------------------------------------------

int cmd_counting(int m, const std::string& a_text, const std::string& b_text,
                 const std::string& format) {
    const SubsetMask set_a = subset_from_text(m, a_text);
    const SubsetMask set_b = subset_from_text(m, b_text);
    const CountingParams params(set_a, set_b);

    const auto split = disjoint_split(params);
    const auto pairs = pair_disjoint_split(params);
    const bool can_brute = m <= kMaxPairBruteforceDim;
    std::optional<DisjointSplit> split_brute;
    std::optional<PairDisjointSplit> pairs_brute;
    if (can_brute) {
        split_brute = disjoint_split_bruteforce(params);
        pairs_brute = pair_disjoint_split_bruteforce(params);
    }
    const std::uint64_t identity =
        ((std::uint64_t{1} << (m - set_b.size())) - 1) * ((std::uint64_t{1} << m) - 2);
    const bool identity_ok = pairs.total() == identity;
    const bool brute_ok =
        !can_brute || (split == *split_brute && pairs == *pairs_brute);

    if (format == "json") {
        ordered_json doc{{"command", "counting"},
                         {"m", m},
                         {"A", mask_elements(set_a)},
                         {"B", mask_elements(set_b)}};
        doc["disjoint_nonempty"] = split.disjoint_nonempty;
        doc["meets"] = split.meets;
        doc["pair_both"] = pairs.both;
        doc["pair_one"] = pairs.one;
        doc["pair_neither"] = pairs.neither;
        doc["pair_total"] = pairs.total();
        doc["total_identity"] = identity_ok;
        if (can_brute) {
            doc["bruteforce"] = ordered_json{{"disjoint_nonempty", split_brute->disjoint_nonempty},
                                             {"meets", split_brute->meets},
                                             {"pair_both", pairs_brute->both},
                                             {"pair_one", pairs_brute->one},
                                             {"pair_neither", pairs_brute->neither}};
            doc["bruteforce_match"] = brute_ok;
        } else {
            doc["bruteforce"] = nullptr;
        }
        emit_json(doc);
    } else {
        std::cout << "command: counting\n";
        std::cout << "m: " << m << "\n";
        std::cout << "A: " << to_string(set_a) << "\n";
        std::cout << "B: " << to_string(set_b) << "\n";
        std::cout << "disjoint-nonempty: " << split.disjoint_nonempty << "\n";
        std::cout << "meets: " << split.meets << "\n";
        std::cout << "pair-both: " << pairs.both << "\n";
        std::cout << "pair-one: " << pairs.one << "\n";
        std::cout << "pair-neither: " << pairs.neither << "\n";
        std::cout << "pair-total: " << pairs.total() << "\n";
        std::cout << "total-identity: " << (identity_ok ? "ok" : "MISMATCH") << "\n";
        if (can_brute)
            std::cout << "bruteforce: " << (brute_ok ? "ok" : "MISMATCH") << "\n";
        else
            std::cout << "bruteforce: skipped (m exceeds cap " << kMaxPairBruteforceDim << ")\n";
    }
    if (!identity_ok || !brute_ok)
        throw VerificationError("counting closed forms disagree with the oracle");
    return 0;
}

// ---- selftest ---------------------------------------------------------------

int cmd_selftest(int threads, const std::string& format) {
    const auto results = selfcheck::run_all(threads);
    bool all_ok = true;
    for (const auto& r : results) all_ok = all_ok && r.passed;
    if (format == "json") {
        ordered_json doc{{"command", "selftest"}};
        ordered_json list = ordered_json::array();
        for (const auto& r : results)
            list.push_back(
                ordered_json{{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        doc["results"] = list;
        doc["all_passed"] = all_ok;
        emit_json(doc);
    } else {
        for (const auto& r : results)
            std::cout << "[" << (r.passed ? "PASS" : "FAIL") << "] " << r.name << " — "
                      << r.detail << "\n";
        std::cout << (all_ok ? "all checks passed" : "CHECKS FAILED") << "\n";
    }
    if (!all_ok) throw VerificationError("selftest failed");
    return 0;
}

int run_guarded(const std::function<int()>& body) {
    try {
        return body();
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const VerificationError& e) {
        std::cerr << "verification mismatch: " << e.what() << "\n";
        return 4;
    } catch (const InternalError& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return 4;
    } catch (const Error& e) {  // precondition and dimension violations
        std::cerr << "precondition violated: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"few-Lee-weight codes over F2+uF2 from simplicial complexes"};
    app.require_subcommand(1);

    auto* spectrum = app.add_subcommand("spectrum", "Lee weight distribution of one code");
    CodeOptions spectrum_opts;
    spectrum_opts.register_on(spectrum);
    std::string mode = "message";
    spectrum->add_option("--mode", mode, "message- or distinct-codeword indexed")
        ->check(CLI::IsMember({"message", "distinct"}));
    bool verify = false;
    spectrum->add_flag("--verify", verify, "cross-check all applicable methods");

    auto* tables = app.add_subcommand("tables", "sweep all closed forms at one m and verify");
    int tables_m = 0;
    std::string tables_format = "text";
    int tables_threads = 0;
    tables->add_option("--m", tables_m, "ambient dimension (1..6)")->required();
    tables->add_option("--format", tables_format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    tables->add_option("--threads", tables_threads, "worker threads (0 = hardware)");

    auto* certify_cmd = app.add_subcommand("certify", "Griesmer report for the Gray image");
    CodeOptions certify_opts;
    certify_opts.register_on(certify_cmd);

    auto* counting = app.add_subcommand("counting", "disjointness-counting point query");
    int counting_m = 0;
    std::string counting_a, counting_b, counting_format = "text";
    counting->add_option("--m", counting_m, "ambient dimension")->required();
    counting->add_option("--A", counting_a, "elements of A")->required();
    counting->add_option("--B", counting_b, "elements of B")->required();
    counting->add_option("--format", counting_format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    auto* selftest = app.add_subcommand("selftest", "run the full verification sweep");
    int selftest_threads = 0;
    std::string selftest_format = "text";
    selftest->add_option("--threads", selftest_threads, "worker threads (0 = hardware)");
    selftest->add_option("--format", selftest_format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (spectrum->parsed())
        return run_guarded([&] { return cmd_spectrum(spectrum_opts, mode, verify); });
    if (tables->parsed())
        return run_guarded([&] { return cmd_tables(tables_m, tables_format, tables_threads); });
    if (certify_cmd->parsed()) return run_guarded([&] { return cmd_certify(certify_opts); });
    if (counting->parsed())
        return run_guarded(
            [&] { return cmd_counting(counting_m, counting_a, counting_b, counting_format); });
    if (selftest->parsed())
        return run_guarded([&] { return cmd_selftest(selftest_threads, selftest_format); });
    return 2;
}
