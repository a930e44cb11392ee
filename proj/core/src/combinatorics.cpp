#include "bendix/combinatorics.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace bendix::combinatorics {

namespace {

long long sum_of(const IntRow& v) {
    return std::accumulate(v.begin(), v.end(), 0LL);
}

struct IntegerSides {
    int n = 0;
    int m = 0;
    std::vector<long long> r;
    long long rho = 0;
    bool integral_lambda = false;
    long long lambda = 0;  // meaningful only when integral_lambda

    explicit IntegerSides(const SideLengths& s) : n(s.n()), m(s.m) {
        r = s.integer_values();
        rho = sum_of(r);
        integral_lambda = rho % (m + 1) == 0;
        lambda = integral_lambda ? rho / (m + 1) : 0;
    }
};

// Rows `next` of the same width that interlace above `prev`
// (next[j] >= prev[j] >= next[j+1]), with prescribed sum, entries in
// [0, max_entry] and `forced_zeros` trailing zeros.
template <typename Emit>
void rows_above(const IntRow& prev, long long row_sum, long long max_entry,
                int forced_zeros, Emit&& emit) {
    const int width = static_cast<int>(prev.size());
    const int live = width - forced_zeros;
    IntRow next(width, 0);
    for (int j = live; j < width; ++j)
        if (prev[j] != 0) return;  // zero tail cannot shrink
    auto rec = [&](auto&& self, int pos, long long remaining) -> void {
        if (pos == live) {
            if (remaining == 0) emit(next);
            return;
        }
        const long long lo = prev[pos];
        long long hi = pos > 0 ? prev[pos - 1] : max_entry;
        hi = std::min({hi, max_entry, remaining});
        for (long long v = hi; v >= lo; --v) {
            next[pos] = v;
            self(self, pos + 1, remaining - v);
        }
        next[pos] = 0;
    };
    rec(rec, 0, row_sum);
}

// Rows one entry shorter that interlace below `upper`
// (upper[j] >= next[j] >= upper[j+1]), with prescribed sum.
template <typename Emit>
void rows_below(const IntRow& upper, long long row_sum, Emit&& emit) {
    const int width = static_cast<int>(upper.size()) - 1;
    IntRow next(width, 0);
    auto rec = [&](auto&& self, int pos, long long remaining) -> void {
        if (pos == width) {
            if (remaining == 0) emit(next);
            return;
        }
        const long long lo = upper[pos + 1];
        const long long hi = std::min(upper[pos], remaining);
        for (long long v = hi; v >= lo; --v) {
            next[pos] = v;
            self(self, pos + 1, remaining - v);
        }
        next[pos] = 0;
    };
    rec(rec, 0, row_sum);
}

void bump(std::uint64_t& nodes, std::uint64_t cap, const char* where) {
    if (++nodes > cap) throw SizeLimit(std::string(where) + ": enumeration cap");
}

}  // namespace

LatticeCount count_lattice_points(const SideLengths& s, bool collect,
                                  std::uint64_t node_cap) {
    const IntegerSides sides(s);
    LatticeCount out;
    if (collect) out.patterns.emplace();
    if (!sides.integral_lambda) {
        out.integral_lambda = false;
        return out;
    }
    const int n = sides.n, m = sides.m;
    std::uint64_t nodes = 0;

    IntRow row0(m + 1, 0);
    row0[0] = sides.r[0];
    std::vector<long long> prefix(n);
    {
        long long acc = 0;
        for (int i = 0; i < n; ++i) prefix[i] = (acc += sides.r[i]);
    }

    if (!collect) {
        // bottom-up DP; entries are capped at Lambda, which together with
        // the final row sum (m+1)*Lambda forces the all-Lambda top row
        std::map<IntRow, BigInt> states;
        if (sides.r[0] <= sides.lambda) states[row0] = 1;
        for (int i = 1; i < n; ++i) {
            std::map<IntRow, BigInt> next;
            for (const auto& state : states) {
                const BigInt& multiplicity = state.second;
                rows_above(state.first, prefix[i], sides.lambda,
                           structural_zero_count(m, i), [&](const IntRow& cand) {
                               bump(nodes, node_cap, "count_lattice_points");
                               next[cand] += multiplicity;
                           });
            }
            states.swap(next);
        }
        for (const auto& state : states) out.count += state.second;
        return out;
    }

    if (sides.r[0] > sides.lambda) return out;
    IntPattern pattern{row0};
    pattern.reserve(n);
    auto rec = [&](auto&& self, int i) -> void {
        if (i == n) {
            out.patterns->push_back(pattern);
            out.count += 1;
            return;
        }
        const IntRow prev = pattern.back();
        rows_above(prev, prefix[i], sides.lambda, structural_zero_count(m, i),
                   [&](const IntRow& cand) {
                       bump(nodes, node_cap, "count_lattice_points");
                       pattern.push_back(cand);
                       self(self, i + 1);
                       pattern.pop_back();
                   });
    };
    rec(rec, 1);
    return out;
}

BigInt kostka(const IntRow& mu, const IntRow& weight) {
    for (std::size_t i = 0; i + 1 < mu.size(); ++i)
        if (mu[i] < mu[i + 1]) throw DomainError("kostka: mu is not a partition");
    if (!mu.empty() && mu.back() < 0)
        throw DomainError("kostka: negative part");
    for (long long v : weight)
        if (v < 0) return 0;
    if (sum_of(mu) != sum_of(weight)) return 0;

    // chains of partitions growing by one horizontal strip per letter
    const int rows = static_cast<int>(mu.size());
    std::map<IntRow, BigInt> states{{IntRow(rows, 0), 1}};
    for (long long boxes : weight) {
        std::map<IntRow, BigInt> next;
        for (const auto& state : states) {
            const IntRow& shape = state.first;
            const BigInt& multiplicity = state.second;
            IntRow grown(rows, 0);
            auto rec = [&](auto&& self, int i, long long remaining) -> void {
                if (i == rows) {
                    if (remaining == 0) next[grown] += multiplicity;
                    return;
                }
                // strip condition: shape[i] <= grown[i] <= shape[i-1]
                long long hi = i > 0 ? shape[i - 1] : mu[0];
                hi = std::min({hi, mu[i], shape[i] + remaining});
                for (long long v = shape[i]; v <= hi; ++v) {
                    grown[i] = v;
                    self(self, i + 1, remaining - (v - shape[i]));
                }
            };
            rec(rec, 0, boxes);
        }
        states.swap(next);
    }
    const auto it = states.find(mu);
    return it == states.end() ? BigInt(0) : it->second;
}

std::vector<IntRow> pieri_tensor(const IntRow& hw, long long k) {
    const int len = static_cast<int>(hw.size());
    for (int i = 0; i + 1 < len; ++i)
        if (hw[i] < hw[i + 1]) throw DomainError("pieri_tensor: weight not dominant");
    if (hw.empty() || hw.back() < 0)
        throw DomainError("pieri_tensor: weight not polynomial");
    if (k <= 0) throw DomainError("pieri_tensor: k must be positive");

    std::vector<IntRow> out;
    IntRow nu(len, 0);
    auto rec = [&](auto&& self, int i, long long remaining) -> void {
        if (i == len) {
            if (remaining == 0) out.push_back(nu);
            return;
        }
        const long long lo = hw[i];
        const long long hi =
            i > 0 ? std::min(hw[i - 1], lo + remaining) : lo + remaining;
        for (long long v = hi; v >= lo; --v) {
            nu[i] = v;
            self(self, i + 1, remaining - (v - lo));
        }
    };
    rec(rec, 0, k);
    return out;  // decreasing lexicographic by construction
}

BigInt multiplicity_det_power(const SideLengths& s) {
    const IntegerSides sides(s);
    if (!sides.integral_lambda) return 0;
    const int width = sides.m + 1;
    std::map<IntRow, BigInt> states{{IntRow(width, 0), 1}};
    for (long long step : sides.r) {
        std::map<IntRow, BigInt> next;
        for (const auto& state : states)
            for (const IntRow& nu : pieri_tensor(state.first, step))
                next[nu] += state.second;
        states.swap(next);
    }
    const auto it = states.find(IntRow(width, sides.lambda));
    return it == states.end() ? BigInt(0) : it->second;
}

BigInt gt_weight_multiplicity(const SideLengths& s) {
    const IntegerSides sides(s);
    if (!sides.integral_lambda) return 0;
    const int n = sides.n;
    if (n < sides.m + 1) return 0;

    // top-down over genuinely triangular arrays: row k has k+1 entries,
    // fixed top row, and the weight condition prescribes every row sum
    IntRow top(n, 0);
    for (int j = 0; j <= sides.m; ++j) top[j] = sides.lambda;
    std::vector<long long> prefix(n);
    {
        long long acc = 0;
        for (int i = 0; i < n; ++i) prefix[i] = (acc += sides.r[i]);
    }
    std::map<IntRow, BigInt> states{{top, 1}};
    for (int k = n - 2; k >= 0; --k) {
        std::map<IntRow, BigInt> next;
        for (const auto& state : states) {
            const BigInt& multiplicity = state.second;
            rows_below(state.first, prefix[k],
                       [&](const IntRow& cand) { next[cand] += multiplicity; });
        }
        states.swap(next);
    }
    BigInt total = 0;
    for (const auto& state : states) total += state.second;
    return total;
}

MultiplicityReport multiplicity_report(const SideLengths& s) {
    const IntegerSides sides(s);
    MultiplicityReport rep;
    rep.m = sides.m;
    rep.r = sides.r;
    rep.integral_lambda = sides.integral_lambda;
    if (!sides.integral_lambda) return rep;  // all four counts are zero

    rep.lattice_count = count_lattice_points(s).count;
    rep.kostka = kostka(IntRow(sides.m + 1, sides.lambda), sides.r);
    rep.pieri_multiplicity = multiplicity_det_power(s);
    rep.gt_weight_multiplicity = combinatorics::gt_weight_multiplicity(s);
    return rep;
}

}  // namespace bendix::combinatorics
