#pragma once

#include <thread>

#include "p5free/graph_io.hpp"
#include "p5free/tree.hpp"

namespace p5free {

enum class EnumerateMode { Count, Agree };

struct EnumerateReport {
    // Per-n totals of {P5, CoP5}-free labeled graphs (count mode).
    std::vector<std::pair<int, std::uint64_t>> counts;
    // Lexicographically sorted "recognize <graph6>" / "split <graph6>" lines
    // for graphs where the constructive and the direct answers differ
    // (agree mode). Empty means full agreement.
    std::vector<std::string> disagreements;
};

/// Labeled graph number `mask` on n vertices: bit k of the mask switches the
/// k-th pair (u,v), u < v, in row-major order.
inline Graph graph_from_edge_mask(int n, std::uint64_t mask) {
    Graph g(n);
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if ((mask >> bit) & 1) g.add_edge(u, v);
    return g;
}

/// Sweep every labeled graph with 1..n_max vertices. Count mode tallies class
/// members per n; agree mode cross-checks recognize against the direct
/// pattern search and the split partition against {C4, CoC4, C5}-freeness.
/// The report is identical for every thread count.
inline EnumerateReport enumerate_labeled(int n_max, EnumerateMode mode, int threads = 1) {
    if (n_max > 7)
        throw std::invalid_argument("enumerate: n is capped at 7 (2^21 graphs)");
    if (threads < 1) threads = 1;

    EnumerateReport report;
    for (int n = 1; n <= n_max; ++n) {
        const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
        const int workers = static_cast<int>(
            std::min<std::uint64_t>(static_cast<std::uint64_t>(threads), total));

        std::vector<std::uint64_t> counts(static_cast<std::size_t>(workers), 0);
        std::vector<std::vector<std::string>> bad(static_cast<std::size_t>(workers));
        std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));

        auto sweep = [&](int w) {
            try {
                const std::uint64_t lo = total * static_cast<std::uint64_t>(w) /
                                         static_cast<std::uint64_t>(workers);
                const std::uint64_t hi = total * (static_cast<std::uint64_t>(w) + 1) /
                                         static_cast<std::uint64_t>(workers);
                for (std::uint64_t mask = lo; mask < hi; ++mask) {
                    Graph g = graph_from_edge_mask(n, mask);
                    if (mode == EnumerateMode::Count) {
                        if (is_free(g, {Pattern::P5, Pattern::CoP5}))
                            ++counts[static_cast<std::size_t>(w)];
                        continue;
                    }
                    if (recognize(g) != is_free(g, {Pattern::P5, Pattern::CoP5}))
                        bad[static_cast<std::size_t>(w)].push_back("recognize " +
                                                                   encode_graph6(g));
                    if (is_split_graph(g) !=
                        is_free(g, {Pattern::C4, Pattern::CoC4, Pattern::C5}))
                        bad[static_cast<std::size_t>(w)].push_back("split " + encode_graph6(g));
                }
            } catch (...) {
                errors[static_cast<std::size_t>(w)] = std::current_exception();
            }
        };

        if (workers == 1) {
            sweep(0);
        } else {
            std::vector<std::thread> pool;
            for (int w = 0; w < workers; ++w) pool.emplace_back(sweep, w);
            for (auto& th : pool) th.join();
        }
        for (const auto& e : errors)
            if (e) std::rethrow_exception(e);

        if (mode == EnumerateMode::Count) {
            std::uint64_t sum = 0;
            for (std::uint64_t c : counts) sum += c;
            report.counts.emplace_back(n, sum);
        } else {
            for (auto& lines : bad)
                report.disagreements.insert(report.disagreements.end(),
                                            std::make_move_iterator(lines.begin()),
                                            std::make_move_iterator(lines.end()));
        }
    }
    std::sort(report.disagreements.begin(), report.disagreements.end());
    return report;
}

}  // namespace p5free
