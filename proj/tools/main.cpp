// Command-line front end: continued-fraction partitions, avoided sets,
// sum-graph avoidability reports and the cross-validation harness.

#include <CLI11.hpp>
#include <json.hpp>

#include <avoidance/avoided_set.hpp>
#include <avoidance/corpus.hpp>
#include <avoidance/genfib.hpp>
#include <avoidance/sum_graph.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

using json = nlohmann::ordered_json;
using namespace avoidance;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInputError = 2;

int resolve_depth_cap(int flag_value) {
    // the environment variable wins over the flag
    if (const char* env = std::getenv("AVOIDANCE_DEPTH_CAP")) {
        try {
            int v = std::stoi(env);
            if (v < 1) throw std::invalid_argument("");
            return v;
        } catch (...) {
            throw std::invalid_argument("AVOIDANCE_DEPTH_CAP must be a positive integer");
        }
    }
    return flag_value;
}

std::vector<std::int64_t> read_s_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open S file: " + path);
    std::vector<std::int64_t> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::size_t pos = 0;
        long long v;
        try {
            v = std::stoll(line, &pos);
        } catch (...) {
            throw std::invalid_argument("S file line " + std::to_string(line_no) +
                                        ": not an integer");
        }
        while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
        if (pos != line.size())
            throw std::invalid_argument("S file line " + std::to_string(line_no) +
                                        ": trailing characters");
        if (v < 1 || (!out.empty() && v <= out.back()))
            throw std::invalid_argument(
                "S file must list positive integers, strictly increasing");
        out.push_back(v);
    }
    return out;
}

json certificate_json(const QuadrupleCertificate& cert) {
    return json{{"d", cert.d},          {"a_plus_d", cert.a_plus_d},
                {"c", cert.c},          {"b_plus_c", cert.b_plus_c},
                {"a", cert.a},          {"b", cert.b},
                {"covers_below", cert.covers_below}};
}

const char* kind_name(AvoidedKind kind) {
    switch (kind) {
        case AvoidedKind::ConvergentNumerator: return "convergent";
        case AvoidedKind::DoubleOfConvergent: return "double";
        case AvoidedKind::IntermediateNumerator: return "intermediate";
    }
    return "?";
}

int run_convergents(const std::string& cf_text, std::int64_t n) {
    CFSpec cf = parse_cf(cf_text);
    for (const auto& c : convergents(cf, static_cast<int>(n))) {
        if (c.n < 0) continue;
        std::cout << json{{"n", c.n}, {"p", c.p.str()}, {"q", c.q.str()}}.dump() << "\n";
    }
    return kExitOk;
}

int run_partition(const std::string& cf_text, std::int64_t n, const std::string& format,
                  int depth_cap) {
    PartitionPrefix p = build_partition(parse_cf(cf_text), n, depth_cap);
    for (std::int64_t i = 1; i <= n; ++i) {
        if (format == "tsv")
            std::cout << i << '\t' << label_char(p.label(i)) << "\n";
        else
            std::cout << json{{"n", i}, {"label", std::string(1, label_char(p.label(i)))}}
                             .dump()
                      << "\n";
    }
    return kExitOk;
}

int run_avoided_set(const std::string& cf_text, std::int64_t limit) {
    auto set = avoided_set_theoretical(parse_cf(cf_text), limit);
    for (const auto& e : set.entries) {
        json row{{"value", e.value}, {"kind", kind_name(e.kind)}, {"n", e.n}};
        if (e.kind == AvoidedKind::IntermediateNumerator)
            row["k"] = static_cast<std::int64_t>(e.k);
        std::cout << row.dump() << "\n";
    }
    return kExitOk;
}

int run_check_unique(const std::string& cf_text, const std::string& s_file, std::int64_t n,
                     std::int64_t target) {
    std::vector<std::int64_t> s;
    json out;
    if (!cf_text.empty()) {
        s = avoided_set_theoretical(parse_cf(cf_text), 2 * n - 1).values();
        out["cf"] = format_cf(parse_cf(cf_text));
    } else {
        s = read_s_file(s_file);
        out["s_file"] = s_file;
    }
    out["n_max"] = n;

    SumGraphPrefix g = build_sum_graph(s, n);
    SumGraphReport report = analyze(g);
    out["bipartite"] = report.bipartite;
    out["components"] = report.components;
    out["coloring_count"] = report.coloring_count.str();

    auto chain = find_quadruple_certificates(s, target > 0 ? target : n);
    json certs = json::array();
    for (const auto& cert : chain.certificates) certs.push_back(certificate_json(cert));
    out["certificates"] = certs;
    out["coverage_reached"] = chain.reached;
    out["max_cover"] = chain.max_cover;
    if (!report.bipartite) out["odd_cycle"] = report.odd_cycle;

    std::cout << out.dump() << "\n";
    return kExitOk;
}

int run_gen_fib(std::int64_t s1, std::int64_t s2, std::int64_t limit) {
    GenFibSeed seed{Int(s1), Int(s2)};
    auto cls = classify_genfib(seed);
    json out;

    std::vector<std::int64_t> seq;
    for (const Int& v : genfib_sequence(seed, Int(2 * limit - 1)))
        seq.push_back(static_cast<std::int64_t>(v));
    SumGraphPrefix g = build_sum_graph(seq, limit);

    if (cls.verdict == GenFibVerdict::NotAvoidable) {
        out["verdict"] = "not_avoidable";
        auto report = analyze(g);
        if (!report.bipartite) out["odd_cycle"] = report.odd_cycle;
    } else {
        out["verdict"] = "uniquely_avoidable";
        out["embedding"] = cls.embedding;
        out["embedding_cf"] = format_cf(*cls.embedding_cf);
        auto chain = find_quadruple_certificates(seq, limit);
        json certs = json::array();
        for (const auto& cert : chain.certificates) certs.push_back(certificate_json(cert));
        out["certificates"] = certs;
        out["coverage_reached"] = chain.reached;
    }
    std::cout << out.dump() << "\n";
    return kExitOk;
}

int run_verify(const std::string& cf_text, std::uint64_t seed, std::int64_t count,
               std::int64_t limit, int depth_cap) {
    std::vector<CFSpec> specs;
    if (!cf_text.empty())
        specs.push_back(parse_cf(cf_text));
    else
        specs = corpus_generate(seed, static_cast<std::size_t>(count));

    std::map<std::string, CFSpec> ordered;  // output sorted by spec string
    for (const CFSpec& cf : specs) ordered.emplace(format_cf(cf), cf);

    bool all_ok = true;
    for (const auto& [text, cf] : ordered) {
        auto theoretical = avoided_set_theoretical(cf, limit).values();
        PartitionPrefix partition = build_partition(cf, limit - 1, depth_cap);
        auto bruteforce = avoided_set_bruteforce(partition, limit);

        ErrorEngine engine(normalize_to_unit_interval(cf).cf, depth_cap);
        std::vector<std::int64_t> membership;
        for (std::int64_t x = 1; x <= limit; ++x)
            if (membership_test(engine, x)) membership.push_back(x);

        std::int64_t mismatch = 0;
        for (std::int64_t x = 1; x <= limit && mismatch == 0; ++x) {
            bool in_theory = std::binary_search(theoretical.begin(), theoretical.end(), x);
            bool in_brute = std::binary_search(bruteforce.begin(), bruteforce.end(), x);
            bool in_member = std::binary_search(membership.begin(), membership.end(), x);
            if (in_theory != in_brute || in_brute != in_member) mismatch = x;
        }

        json row{{"cf", text}, {"limit", limit}};
        if (mismatch == 0) {
            row["status"] = "ok";
            row["size"] = static_cast<std::int64_t>(theoretical.size());
        } else {
            all_ok = false;
            row["status"] = "mismatch";
            row["x"] = mismatch;
            row["in_theoretical"] =
                std::binary_search(theoretical.begin(), theoretical.end(), mismatch);
            row["in_bruteforce"] =
                std::binary_search(bruteforce.begin(), bruteforce.end(), mismatch);
            row["in_membership"] =
                std::binary_search(membership.begin(), membership.end(), mismatch);
        }
        std::cout << row.dump() << "\n";
    }
    return all_ok ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Additive partitions of the integers driven by continued fractions"};
    app.require_subcommand(1);

    std::string cf_text, s_file, format = "json";
    std::int64_t n = 10, limit = 100, target = 0, s1 = 1, s2 = 2, count = 20;
    std::int64_t genfib_limit = 300, verify_limit = 2000;
    std::uint64_t seed = 42;
    int depth_cap = kDefaultDepthCap;
    app.add_option("--depth-cap", depth_cap,
                   "interval refinement cap (AVOIDANCE_DEPTH_CAP overrides)")
        ->check(CLI::PositiveNumber);

    auto* conv = app.add_subcommand("convergents", "print convergents p_n/q_n as JSON lines");
    conv->add_option("--cf", cf_text, "CF spec, e.g. \"[1;(1)]\"")->required();
    conv->add_option("--n", n, "largest index")->required()->check(CLI::NonNegativeNumber);

    auto* part = app.add_subcommand("partition", "label 1..N with the two-part partition");
    part->add_option("--cf", cf_text)->required();
    part->add_option("--n", n, "prefix length")->required()->check(CLI::PositiveNumber);
    part->add_option("--format", format)->check(CLI::IsMember({"json", "tsv"}));

    auto* avoided = app.add_subcommand("avoided-set",
                                       "avoided sums up to a limit, with classification");
    avoided->add_option("--cf", cf_text)->required();
    avoided->add_option("--limit", limit)->required()->check(CLI::PositiveNumber);

    auto* unique = app.add_subcommand("check-unique",
                                      "bipartiteness/connectivity report for G(S)");
    auto* unique_cf = unique->add_option("--cf", cf_text, "use the avoided set of this spec");
    auto* unique_s = unique->add_option("--s-file", s_file,
                                        "file with S, one integer per line, ascending");
    unique->add_option("--n", n, "vertex range [1, N]")->required()->check(CLI::PositiveNumber);
    unique->add_option("--target", target, "certificate cover target (default N)");
    unique_cf->excludes(unique_s);

    auto* genfib = app.add_subcommand("gen-fib", "classify a generalized Fibonacci sequence");
    genfib->add_option("--s1", s1)->required()->check(CLI::PositiveNumber);
    genfib->add_option("--s2", s2)->required()->check(CLI::PositiveNumber);
    genfib->add_option("--limit", genfib_limit, "graph range for certificates/cycles")
        ->check(CLI::PositiveNumber);

    auto* verify = app.add_subcommand("verify",
                                      "cross-validate the three avoided-set pipelines");
    verify->add_option("--cf", cf_text, "verify one spec instead of the random corpus");
    verify->add_option("--seed", seed, "corpus seed");
    verify->add_option("--count", count, "corpus size")->check(CLI::PositiveNumber);
    verify->add_option("--limit", verify_limit, "avoided-set limit")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);  // prints the usage message
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        int cap = resolve_depth_cap(depth_cap);
        if (conv->parsed()) return run_convergents(cf_text, n);
        if (part->parsed()) return run_partition(cf_text, n, format, cap);
        if (avoided->parsed()) return run_avoided_set(cf_text, limit);
        if (unique->parsed()) {
            if (cf_text.empty() && s_file.empty())
                throw std::invalid_argument("check-unique needs --cf or --s-file");
            return run_check_unique(cf_text, s_file, n, target);
        }
        if (genfib->parsed()) return run_gen_fib(s1, s2, genfib_limit);
        if (verify->parsed()) return run_verify(cf_text, seed, count, verify_limit, cap);
    } catch (const std::exception& e) {
        std::cerr << json{{"error", e.what()}}.dump() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
