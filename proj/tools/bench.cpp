// Compares the OpenMP kernels against their serial references on the three
// data-parallel hot spots: partition labeling, the brute-force avoided-set
// scan, and sum-graph construction.

#include <avoidance/avoided_set.hpp>
#include <avoidance/sum_graph.hpp>

#include <chrono>
#include <cstdio>
#include <string>

using namespace avoidance;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

template <typename F>
double timed(F&& f) {
    auto start = std::chrono::steady_clock::now();
    f();
    return seconds_since(start);
}

void report(const std::string& name, double serial, double parallel, bool same) {
    std::printf("%-26s serial %8.3fs   parallel %8.3fs   speedup %5.2fx   %s\n",
                name.c_str(), serial, parallel, serial / parallel,
                same ? "outputs match" : "OUTPUTS DIFFER");
}

}  // namespace

int main(int argc, char** argv) {
    std::int64_t n = argc > 1 ? std::stoll(argv[1]) : 6000;

    CFSpec cf = parse_cf("[1;2,(3,4)]");

    PartitionPrefix serial_labels, parallel_labels;
    double t_ser = timed([&] { serial_labels = build_partition_serial(cf, n); });
    double t_par = timed([&] { parallel_labels = build_partition(cf, n); });
    report("partition labels", t_ser, t_par, serial_labels.labels == parallel_labels.labels);

    // worst case for the scan: the odd/even partition avoids every odd sum,
    // so half the candidates run their full pair loop
    PartitionPrefix parity;
    parity.n_max = n;
    parity.labels.resize(static_cast<std::size_t>(n));
    for (std::int64_t i = 1; i <= n; ++i)
        parity.labels[static_cast<std::size_t>(i - 1)] =
            i % 2 ? PartitionLabel::A : PartitionLabel::B;

    std::vector<std::int64_t> brute_ser, brute_par;
    double b_ser = timed([&] { brute_ser = avoided_set_bruteforce_serial(parity, n); });
    double b_par = timed([&] { brute_par = avoided_set_bruteforce(parity, n); });
    report("brute-force avoided set", b_ser, b_par, brute_ser == brute_par);

    auto s = avoided_set_theoretical(cf, 2 * n - 1).values();
    SumGraphPrefix g_ser, g_par;
    double g_ser_t = timed([&] { g_ser = build_sum_graph_serial(s, n); });
    double g_par_t = timed([&] { g_par = build_sum_graph(s, n); });
    report("sum-graph build", g_ser_t, g_par_t, g_ser.adjacency == g_par.adjacency);

    return 0;
}
