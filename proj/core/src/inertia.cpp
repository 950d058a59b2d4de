#include "twopos/inertia.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace twopos {

namespace {

struct Overflow {};

using int128 = __int128;

int128 gcd128(int128 a, int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Reduced fraction on 128-bit integers; throws Overflow so the caller can
// redo the elimination with arbitrary-precision rationals.
struct Frac {
    int128 num = 0;
    int128 den = 1;

    Frac() = default;
    Frac(std::int64_t v) : num(v) {}

    void reduce() {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        int128 g = gcd128(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }
    int sign() const { return num > 0 ? 1 : (num < 0 ? -1 : 0); }
};

int128 checked_mul(int128 a, int128 b) {
    int128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
}

int128 checked_add(int128 a, int128 b) {
    int128 r;
    if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
    return r;
}

Frac operator*(const Frac& a, const Frac& b) {
    Frac r;
    r.num = checked_mul(a.num, b.num);
    r.den = checked_mul(a.den, b.den);
    r.reduce();
    return r;
}

Frac operator/(const Frac& a, const Frac& b) {
    Frac r;
    r.num = checked_mul(a.num, b.den);
    r.den = checked_mul(a.den, b.num);
    r.reduce();
    return r;
}

Frac operator-(const Frac& a, const Frac& b) {
    Frac r;
    r.num = checked_add(checked_mul(a.num, b.den), -checked_mul(b.num, a.den));
    r.den = checked_mul(a.den, b.den);
    r.reduce();
    return r;
}

Frac operator+(const Frac& a, const Frac& b) {
    Frac r;
    r.num = checked_add(checked_mul(a.num, b.den), checked_mul(b.num, a.den));
    r.den = checked_mul(a.den, b.den);
    r.reduce();
    return r;
}

using BigRat = boost::multiprecision::cpp_rational;

int sign_of(const Frac& x) { return x.sign(); }
int sign_of(const BigRat& x) { return x.sign(); }

template <class T>
Inertia eliminate(std::vector<std::vector<T>> m) {
    const int n = static_cast<int>(m.size());
    Inertia out;
    std::vector<int> active(n);
    for (int i = 0; i < n; ++i) active[i] = i;

    while (!active.empty()) {
        // (a) pivot a nonzero diagonal entry
        int pivot = -1;
        for (int idx : active)
            if (sign_of(m[idx][idx]) != 0) {
                pivot = idx;
                break;
            }
        if (pivot < 0) {
            // (b) all-zero diagonal: add row+column j into i to expose a pivot
            int ai = -1, aj = -1;
            for (std::size_t a = 0; a < active.size() && ai < 0; ++a)
                for (std::size_t b = a + 1; b < active.size(); ++b)
                    if (sign_of(m[active[a]][active[b]]) != 0) {
                        ai = active[a];
                        aj = active[b];
                        break;
                    }
            if (ai < 0) {
                // (c) remaining block is zero
                out.eta += static_cast<int>(active.size());
                break;
            }
            for (int k : active) m[ai][k] = m[ai][k] + m[aj][k];
            for (int k : active) m[k][ai] = m[k][ai] + m[k][aj];
            pivot = ai;
        }
        T d = m[pivot][pivot];
        if (sign_of(d) > 0)
            ++out.p;
        else
            ++out.n;
        std::vector<int> rest;
        rest.reserve(active.size() - 1);
        for (int idx : active)
            if (idx != pivot) rest.push_back(idx);
        for (std::size_t a = 0; a < rest.size(); ++a) {
            int j = rest[a];
            if (sign_of(m[pivot][j]) == 0) continue;
            T f = m[pivot][j] / d;
            for (std::size_t b = a; b < rest.size(); ++b) {
                int k = rest[b];
                m[j][k] = m[j][k] - f * m[pivot][k];
                if (k != j) m[k][j] = m[j][k];
            }
        }
        active = std::move(rest);
    }
    return out;
}

}  // namespace

Inertia matrix_inertia(const std::vector<std::vector<std::int64_t>>& m) {
    const int n = static_cast<int>(m.size());
    try {
        std::vector<std::vector<Frac>> f(n, std::vector<Frac>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) f[i][j] = Frac(m[i][j]);
        return eliminate(std::move(f));
    } catch (const Overflow&) {
        std::vector<std::vector<BigRat>> f(n, std::vector<BigRat>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) f[i][j] = BigRat(m[i][j]);
        return eliminate(std::move(f));
    }
}

std::vector<std::vector<std::int64_t>> adjacency_matrix(const Graph& g) {
    int n = g.order();
    std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(n, 0));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && g.adjacent(u, v)) m[u][v] = 1;
    return m;
}

Inertia inertia(const Graph& g) {
    return matrix_inertia(adjacency_matrix(g));
}

}  // namespace twopos
