#pragma once

// Straightforward re-implementations used as test oracles. They work on plain
// integer matrices and share no code with the library beyond reading cells.

#include <cstdint>
#include <vector>

#include "gid/flow.hpp"
#include "gid/profile.hpp"

namespace naive {

// +1, -1, 0 for an indifferent entry.
using Matrix = std::vector<std::vector<int>>;
using Members = std::vector<bool>;

inline Matrix matrix_of(const gid::Profile& p)
{
    Matrix m(static_cast<std::size_t>(p.size()), std::vector<int>(static_cast<std::size_t>(p.size())));
    for (int a = 0; a < p.size(); ++a)
        for (int b = 0; b < p.size(); ++b) {
            gid::Cell c = p.at(a, b);
            m[a][b] = c == gid::Cell::Pos ? 1 : c == gid::Cell::Neg ? -1 : 0;
        }
    return m;
}

inline Members members_of(gid::IndividualSet s, int n)
{
    Members out(static_cast<std::size_t>(n), false);
    for (int a : s)
        out[a] = true;
    return out;
}

inline gid::IndividualSet set_of(const Members& m)
{
    gid::IndividualSet s;
    for (std::size_t a = 0; a < m.size(); ++a)
        if (m[a])
            s.insert(static_cast<int>(a));
    return s;
}

inline int count_in(const Matrix& m, const Members& t, int col, int value, bool include_self = true)
{
    int c = 0;
    for (std::size_t b = 0; b < m.size(); ++b)
        if (t[b] && m[b][col] == value && (include_self || static_cast<int>(b) != col))
            ++c;
    return c;
}

inline Members ternary(const Matrix& m, const Members& t, int s, int s_prime, int tq)
{
    Members out(m.size(), false);
    for (std::size_t a = 0; a < m.size(); ++a) {
        if (!t[a])
            continue;
        int col = static_cast<int>(a);
        int self = m[a][a];
        if (self == 1)
            out[a] = count_in(m, t, col, 1) >= s;
        else if (self == -1)
            out[a] = count_in(m, t, col, -1) < tq;
        else
            out[a] = count_in(m, t, col, 1, false) >= s_prime;
    }
    return out;
}

inline Members consent(const Matrix& m, const Members& t, int s, int tq) { return ternary(m, t, s, s, tq); }

inline Members closure(const Matrix& m, const Members& t, Members k, std::vector<Members>* rounds)
{
    while (true) {
        if (rounds)
            rounds->push_back(k);
        Members next = k;
        for (std::size_t a = 0; a < m.size(); ++a)
            if (k[a])
                for (std::size_t b = 0; b < m.size(); ++b)
                    if (t[b] && m[a][b] == 1)
                        next[b] = true;
        if (next == k)
            return k;
        k = next;
    }
}

inline Members csr(const Matrix& m, const Members& t, std::vector<Members>* rounds = nullptr)
{
    Members k(m.size(), false);
    for (std::size_t a = 0; a < m.size(); ++a) {
        if (!t[a])
            continue;
        bool all = true;
        for (std::size_t b = 0; b < m.size(); ++b)
            if (t[b] && m[b][a] != 1)
                all = false;
        k[a] = all;
    }
    return closure(m, t, k, rounds);
}

inline Members lsr(const Matrix& m, const Members& t, std::vector<Members>* rounds = nullptr)
{
    Members k(m.size(), false);
    for (std::size_t a = 0; a < m.size(); ++a)
        k[a] = t[a] && m[a][a] == 1;
    return closure(m, t, k, rounds);
}

// Minimum s-t cut by trying every vertex bipartition.
inline std::int64_t min_cut_exhaustive(const gid::FlowNetwork& net)
{
    std::vector<int> free;
    for (int v = 0; v < net.vertices; ++v)
        if (v != net.source && v != net.sink)
            free.push_back(v);
    std::int64_t best = -1;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free.size()); ++mask) {
        std::vector<bool> side(static_cast<std::size_t>(net.vertices), false);
        side[net.source] = true;
        for (std::size_t i = 0; i < free.size(); ++i)
            if ((mask >> i) & 1U)
                side[free[i]] = true;
        std::int64_t cut = 0;
        for (const auto& a : net.arcs)
            if (side[a.from] && !side[a.to])
                cut += a.capacity;
        if (best < 0 || cut < best)
            best = cut;
    }
    return best;
}

} // namespace naive
