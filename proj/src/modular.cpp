#include "modular.hpp"

#include <climits>
#include <cstdint>
#include <optional>

namespace wz::modular {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using MPoly = std::vector<u64>;

// primes just above 2^61, generated on demand
u64 prime_at(std::size_t i) {
    static std::vector<u64> primes;
    while (primes.size() <= i) {
        mpz_class p = primes.empty() ? mpz_class(1) << 61 : mpz_class(static_cast<unsigned long>(primes.back()));
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        primes.push_back(p.get_ui());
    }
    return primes[i];
}

u64 mulm(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }
u64 addm(u64 a, u64 b, u64 p) { return a + b >= p ? a + b - p : a + b; }
u64 subm(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

u64 powm(u64 a, u64 e, u64 p) {
    u64 r = 1;
    while (e) {
        if (e & 1) r = mulm(r, a, p);
        a = mulm(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 invm(u64 a, u64 p) { return powm(a, p - 2, p); }

u64 reduce(const Integer& z, u64 p) { return mpz_fdiv_ui(z.get_mpz_t(), p); }

void trim(MPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

void trim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

void trim(ZBiPoly& a) {
    for (auto& r : a) trim(r);
    while (!a.empty() && a.back().empty()) a.pop_back();
}

int deg(const MPoly& a) { return static_cast<int>(a.size()) - 1; }
int deg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

int deg_x(const ZBiPoly& a) {
    int d = -1;
    for (const auto& r : a) d = std::max(d, deg(r));
    return d;
}

MPoly reduce(const ZPoly& a, u64 p) {
    MPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = reduce(a[i], p);
    trim(r);
    return r;
}

u64 eval(const MPoly& a, u64 x, u64 p) {
    u64 v = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) v = addm(mulm(v, x, p), *it, p);
    return v;
}

void rem_in_place(MPoly& a, const MPoly& b, u64 p) {
    const int db = deg(b);
    const u64 inv = invm(b.back(), p);
    for (int i = deg(a); i >= db; --i) {
        u64 c = mulm(a[static_cast<std::size_t>(i)], inv, p);
        if (c != 0)
            for (int j = 0; j <= db; ++j) {
                auto& t = a[static_cast<std::size_t>(i - db + j)];
                t = subm(t, mulm(c, b[static_cast<std::size_t>(j)], p), p);
            }
    }
    a.resize(static_cast<std::size_t>(db));
    trim(a);
}

// monic gcd over Z/p
MPoly gcd_mod(MPoly a, MPoly b, u64 p) {
    while (!b.empty()) {
        rem_in_place(a, b, p);
        std::swap(a, b);
    }
    if (a.empty()) return a;
    const u64 inv = invm(a.back(), p);
    for (auto& c : a) c = mulm(c, inv, p);
    return a;
}

Integer content(const ZPoly& a) {
    Integer g = 0;
    for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

ZPoly primitive(ZPoly a) {
    Integer g = content(a);
    if (a.back() < 0) g = -g;
    for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return a;
}

std::optional<ZPoly> divide_exact(ZPoly a, const ZPoly& b) {
    trim(a);
    const int db = deg(b);
    if (deg(a) < db) return a.empty() ? std::optional<ZPoly>(ZPoly{}) : std::nullopt;
    ZPoly q(static_cast<std::size_t>(deg(a) - db + 1));
    for (int i = deg(a); i >= db; --i) {
        const Integer& top = a[static_cast<std::size_t>(i)];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), b.back().get_mpz_t())) return std::nullopt;
        Integer c = top / b.back();
        for (int j = 0; j <= db; ++j) a[static_cast<std::size_t>(i - db + j)] -= c * b[static_cast<std::size_t>(j)];
        q[static_cast<std::size_t>(i - db)] = c;
    }
    trim(a);
    if (!a.empty()) return std::nullopt;
    return q;
}

ZPoly scaled(ZPoly a, const Integer& c) {
    for (auto& v : a) v *= c;
    return a;
}

// gcd in Z[x] including the integer content
ZPoly full_gcd(const ZPoly& a, const ZPoly& b) {
    if (a.empty()) return b.empty() || b.back() > 0 ? b : scaled(b, Integer(-1));
    if (b.empty()) return full_gcd(b, a);
    Integer c;
    mpz_gcd(c.get_mpz_t(), content(a).get_mpz_t(), content(b).get_mpz_t());
    if (deg(a) == 0 || deg(b) == 0) return ZPoly{c};
    return scaled(gcd(a, b), c);
}

// Incremental Chinese remaindering; the accumulated value lives in [0, M).
struct Crt {
    Integer modulus = 0;
    std::vector<Integer> values;

    void reset() {
        modulus = 0;
        values.clear();
    }

    void add(const std::vector<u64>& image, u64 p) {
        if (modulus == 0) {
            values.assign(image.size(), Integer());
            for (std::size_t i = 0; i < image.size(); ++i) values[i] = static_cast<unsigned long>(image[i]);
            modulus = static_cast<unsigned long>(p);
            return;
        }
        const u64 minv = invm(reduce(modulus, p), p);
        for (std::size_t i = 0; i < image.size(); ++i) {
            u64 h = reduce(values[i], p);
            u64 k = mulm(subm(image[i], h, p), minv, p);
            values[i] += modulus * static_cast<unsigned long>(k);
        }
        modulus *= static_cast<unsigned long>(p);
    }

    std::vector<Integer> symmetric() const {
        std::vector<Integer> out = values;
        Integer half = modulus / 2;
        for (auto& v : out)
            if (v > half) v -= modulus;
        return out;
    }
};

}  // namespace

ZPoly gcd(const ZPoly& a0, const ZPoly& b0) {
    ZPoly a = primitive(a0), b = primitive(b0);
    if (deg(a) == 0 || deg(b) == 0) return ZPoly{1};
    Integer gamma;
    mpz_gcd(gamma.get_mpz_t(), a.back().get_mpz_t(), b.back().get_mpz_t());
    int d = INT_MAX;
    Crt crt;
    std::vector<Integer> previous;
    for (std::size_t i = 0;; ++i) {
        const u64 p = prime_at(i);
        if (reduce(a.back(), p) == 0 || reduce(b.back(), p) == 0) continue;
        MPoly g = gcd_mod(reduce(a, p), reduce(b, p), p);
        if (deg(g) == 0) return ZPoly{1};
        if (deg(g) > d) continue;
        if (deg(g) < d) {
            d = deg(g);
            crt.reset();
            previous.clear();
        }
        const u64 gm = reduce(gamma, p);
        for (auto& c : g) c = mulm(c, gm, p);
        crt.add(g, p);
        std::vector<Integer> s = crt.symmetric();
        if (s == previous) {
            ZPoly cand = primitive(ZPoly(s.begin(), s.end()));
            if (divide_exact(a, cand) && divide_exact(b, cand)) return cand;
            d = INT_MAX;
            crt.reset();
            s.clear();
        }
        previous = std::move(s);
    }
}

namespace {

std::optional<ZBiPoly> divide_exact(ZBiPoly a, const ZBiPoly& b) {
    trim(a);
    const int db = static_cast<int>(b.size()) - 1;
    if (static_cast<int>(a.size()) - 1 < db) return a.empty() ? std::optional<ZBiPoly>(ZBiPoly{}) : std::nullopt;
    ZBiPoly q(a.size() - static_cast<std::size_t>(db));
    for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
        if (a[static_cast<std::size_t>(i)].empty()) continue;
        auto c = divide_exact(a[static_cast<std::size_t>(i)], b.back());
        if (!c) return std::nullopt;
        for (int j = 0; j <= db; ++j) {
            const ZPoly& bj = b[static_cast<std::size_t>(j)];
            ZPoly& row = a[static_cast<std::size_t>(i - db + j)];
            if (row.size() < c->size() + bj.size()) row.resize(c->size() + bj.size());
            for (std::size_t s = 0; s < c->size(); ++s)
                for (std::size_t t = 0; t < bj.size(); ++t) row[s + t] -= (*c)[s] * bj[t];
            trim(row);
        }
        q[static_cast<std::size_t>(i - db)] = std::move(*c);
    }
    trim(a);
    if (!a.empty()) return std::nullopt;
    return q;
}

u64 splitmix(u64 z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// gcd modulo p of two bivariate images by evaluation at pseudo-random points
// (fixed points like x = 1 are often unlucky) and Newton interpolation, scaled so that the leading coefficient in y is
// gamma. Empty result signals a constant gcd.
std::vector<MPoly> gcd_mod(const std::vector<MPoly>& a, const std::vector<MPoly>& b, const MPoly& gamma, int bound,
                           u64 p) {
    std::vector<MPoly> h;
    MPoly q{1};
    int count = 0, dmin = INT_MAX;
    for (u64 k = 0;; ++k) {
        const u64 x = splitmix(p ^ k) % p;
        if (x == 0 || eval(a.back(), x, p) == 0 || eval(b.back(), x, p) == 0) continue;
        MPoly ua(a.size()), ub(b.size());
        for (std::size_t j = 0; j < a.size(); ++j) ua[j] = eval(a[j], x, p);
        for (std::size_t j = 0; j < b.size(); ++j) ub[j] = eval(b[j], x, p);
        MPoly g = gcd_mod(ua, ub, p);
        if (deg(g) == 0) return {};
        if (deg(g) > dmin) continue;
        if (deg(g) < dmin) {
            dmin = deg(g);
            h.assign(static_cast<std::size_t>(dmin) + 1, MPoly());
            q = MPoly{1};
            count = 0;
        }
        const u64 gx = eval(gamma, x, p);
        const u64 qx = eval(q, x, p);
        if (qx == 0) continue;  // repeated point
        const u64 inv = invm(qx, p);
        for (int j = 0; j <= dmin; ++j) {
            MPoly& hj = h[static_cast<std::size_t>(j)];
            u64 c = mulm(subm(mulm(g[static_cast<std::size_t>(j)], gx, p), eval(hj, x, p), p), inv, p);
            if (c == 0) continue;
            if (hj.size() < q.size()) hj.resize(q.size());
            for (std::size_t k = 0; k < q.size(); ++k) hj[k] = addm(hj[k], mulm(c, q[k], p), p);
        }
        // q *= (X - x)
        q.push_back(0);
        for (std::size_t k = q.size() - 1; k > 0; --k) q[k] = subm(q[k - 1], mulm(q[k], x, p), p);
        q[0] = subm(0, mulm(q[0], x, p), p);
        if (++count > bound) break;
    }
    for (auto& r : h) trim(r);
    return h;
}

}  // namespace

ZBiPoly gcd(const ZBiPoly& a0, const ZBiPoly& b0) {
    ZBiPoly a = a0, b = b0;
    trim(a);
    trim(b);
    const ZPoly gamma = full_gcd(a.back(), b.back());
    const int bound = deg(gamma) + std::min(deg_x(a), deg_x(b));
    const std::size_t width = static_cast<std::size_t>(bound) + 1;
    int d = INT_MAX;
    Crt crt;
    std::vector<Integer> previous;
    for (std::size_t i = 0;; ++i) {
        const u64 p = prime_at(i);
        if (reduce(a.back().back(), p) == 0 || reduce(b.back().back(), p) == 0) continue;
        std::vector<MPoly> ap, bp;
        for (const auto& r : a) ap.push_back(reduce(r, p));
        for (const auto& r : b) bp.push_back(reduce(r, p));
        std::vector<MPoly> h = gcd_mod(ap, bp, reduce(gamma, p), bound, p);
        if (h.empty()) return ZBiPoly{ZPoly{1}};
        const int dy = static_cast<int>(h.size()) - 1;
        if (dy > d) continue;
        if (dy < d) {
            d = dy;
            crt.reset();
            previous.clear();
        }
        std::vector<u64> flat(static_cast<std::size_t>(d + 1) * width, 0);
        for (std::size_t j = 0; j < h.size(); ++j)
            for (std::size_t k = 0; k < h[j].size() && k < width; ++k) flat[j * width + k] = h[j][k];
        crt.add(flat, p);
        std::vector<Integer> s = crt.symmetric();
        if (s == previous) {
            ZBiPoly cand(static_cast<std::size_t>(d) + 1);
            for (std::size_t j = 0; j < cand.size(); ++j)
                cand[j] = ZPoly(s.begin() + static_cast<long>(j * width), s.begin() + static_cast<long>((j + 1) * width));
            trim(cand);
            ZPoly c;
            for (const auto& r : cand) c = full_gcd(c, r);
            for (auto& r : cand)
                if (!r.empty()) r = *divide_exact(r, c);
            if (cand.back().back() < 0)
                for (auto& r : cand)
                    for (auto& v : r) v = -v;
            if (divide_exact(a, cand) && divide_exact(b, cand)) return cand;
            d = INT_MAX;
            crt.reset();
            s.clear();
        }
        previous = std::move(s);
    }
}

}  // namespace wz::modular
