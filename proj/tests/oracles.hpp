// Test-side oracles, deliberately independent of the library's enumeration
// and bijection code paths: dumb filters and counters used to freeze expected
// values. Keep these naive; their job is to be obviously correct.

#ifndef LATBIJ_TESTS_ORACLES_HPP
#define LATBIJ_TESTS_ORACLES_HPP

#include <cstdint>
#include <vector>

namespace oracles {

// Number of growth sequences of length n by filtering every tuple in
// {0..n}^n against the three defining conditions.
inline std::uint64_t growth_seq_count(int n) {
    std::vector<int> u(n, 0);
    std::uint64_t count = 0;
    auto valid = [&] {
        if (u[0] != 1) return false;
        int last = 0;
        for (int i = 0; i < n; ++i) {
            if (u[i] > i + 1) return false;
            if (u[i] != 0) {
                if (u[i] < last) return false;
                last = u[i];
            }
        }
        return true;
    };
    while (true) {
        if (valid()) ++count;
        int pos = n - 1;
        while (pos >= 0 && u[pos] == n) u[pos--] = 0;
        if (pos < 0) break;
        ++u[pos];
    }
    return count;
}

// Dyck path counter: ballot-style backtracking over E/N words staying
// weakly below the diagonal.
inline std::uint64_t dyck_count(int e_left, int n_left, int open) {
    // open = #E - #N so far
    if (e_left == 0 && n_left == 0) return 1;
    std::uint64_t total = 0;
    if (e_left > 0) total += dyck_count(e_left - 1, n_left, open + 1);
    if (n_left > 0 && open > 0) total += dyck_count(e_left, n_left - 1, open - 1);
    return total;
}

inline std::uint64_t dyck_count(int n) { return dyck_count(n, n, 0); }

// All members of L(i,j) by filtering every tuple in {1..j+2}^i.
inline std::vector<std::vector<int>> bounded_seqs_brute(int i, int j) {
    std::vector<std::vector<int>> out;
    std::vector<int> u(i, 1);
    if (i == 0) {
        out.push_back({});
        return out;
    }
    while (true) {
        bool ok = true;
        int running_max = 0;
        for (int k = 0; k < i && ok; ++k) {
            if (k > 0 && u[k] < running_max - 1) ok = false;
            running_max = std::max(running_max, u[k]);
        }
        if (ok) out.push_back(u);
        int pos = i - 1;
        while (pos >= 0 && u[pos] == j + 2) u[pos--] = 1;
        if (pos < 0) break;
        ++u[pos];
    }
    return out;
}

}  // namespace oracles

#endif
