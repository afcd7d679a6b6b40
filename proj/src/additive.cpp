#include "gridfree/additive.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cmath>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "gridfree/errors.hpp"

namespace gridfree {

namespace {

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t v) {
    std::vector<std::pair<std::int64_t, int>> fs;
    for (std::int64_t p = 2; p * p <= v; p += (p == 2 ? 1 : 2)) {
        if (v % p != 0) continue;
        int e = 0;
        while (v % p == 0) {
            v /= p;
            ++e;
        }
        fs.emplace_back(p, e);
    }
    if (v > 1) fs.emplace_back(v, 1);
    return fs;
}

// ------------------------------------------------------- GF(p^d) arithmetic

// Elements are coefficient vectors (low degree first) mod p, reduced by a
// monic irreducible of degree d.
struct Field {
    std::int64_t p;
    int d;
    std::vector<std::int64_t> irred;   // size d+1, monic
    std::int64_t order;                // p^d

    using Elt = std::vector<std::int64_t>;

    Elt zero() const { return Elt(d, 0); }
    Elt one() const {
        Elt e(d, 0);
        e[0] = 1;
        return e;
    }

    Elt add(const Elt& a, const Elt& b) const {
        Elt r(d);
        for (int i = 0; i < d; ++i) r[i] = (a[i] + b[i]) % p;
        return r;
    }

    Elt mul(const Elt& a, const Elt& b) const {
        std::vector<std::int64_t> prod(2 * d - 1, 0);
        for (int i = 0; i < d; ++i) {
            if (a[i] == 0) continue;
            for (int j = 0; j < d; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
        }
        // reduce by the monic irreducible
        for (int i = 2 * d - 2; i >= d; --i) {
            const std::int64_t c = prod[i];
            if (c == 0) continue;
            prod[i] = 0;
            for (int j = 0; j < d; ++j) {
                prod[i - d + j] = ((prod[i - d + j] - c * irred[j]) % p + p) % p;
            }
        }
        prod.resize(d);
        return prod;
    }

    Elt pow(Elt base, std::int64_t e) const {
        Elt r = one();
        while (e > 0) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

    std::uint64_t encode(const Elt& a) const {
        std::uint64_t v = 0;
        for (int i = d - 1; i >= 0; --i) v = v * static_cast<std::uint64_t>(p) + a[i];
        return v;
    }

    Elt decode(std::uint64_t v) const {
        Elt a(d, 0);
        for (int i = 0; i < d; ++i) {
            a[i] = static_cast<std::int64_t>(v % p);
            v /= p;
        }
        return a;
    }

    bool is_zero(const Elt& a) const {
        return std::all_of(a.begin(), a.end(), [](std::int64_t c) { return c == 0; });
    }
};

// Polynomial helpers over GF(p) for the irreducibility test (coefficients
// low-first, arbitrary degree, trimmed).
using Poly = std::vector<std::int64_t>;

Poly poly_trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

Poly poly_mod(Poly a, const Poly& f, std::int64_t p) {
    const int df = static_cast<int>(f.size()) - 1;   // f monic
    for (int i = static_cast<int>(a.size()) - 1; i >= df; --i) {
        const std::int64_t c = a[i] % p;
        if (c == 0) continue;
        for (int j = 0; j <= df; ++j) {
            a[i - df + j] = ((a[i - df + j] - c * f[j]) % p + p) % p;
        }
    }
    a.resize(df);
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::int64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
    return poly_mod(std::move(prod), f, p);
}

// x^(p^reps) mod f via repeated Frobenius-by-squaring.
Poly poly_x_pow_p_tower(const Poly& f, std::int64_t p, int reps) {
    Poly r = poly_mod(Poly{0, 1}, f, p);
    for (int t = 0; t < reps; ++t) {
        // raise to the p-th power by square-and-multiply on the exponent p
        Poly acc{1};
        Poly base = r;
        std::int64_t e = p;
        while (e > 0) {
            if (e & 1) acc = poly_mulmod(acc, base, f, p);
            base = poly_mulmod(base, base, f, p);
            e >>= 1;
        }
        r = acc;
    }
    return r;
}

Poly poly_gcd(Poly a, Poly b, std::int64_t p) {
    a = poly_trim(std::move(a));
    b = poly_trim(std::move(b));
    while (!b.empty()) {
        // reduce a mod b (b made monic on the fly)
        const std::int64_t lead = b.back();
        std::int64_t inv = 1;
        // Fermat inverse of lead mod p
        std::int64_t e = p - 2, base = lead % p;
        while (e > 0) {
            if (e & 1) inv = inv * base % p;
            base = base * base % p;
            e >>= 1;
        }
        Poly bm(b.size());
        for (std::size_t i = 0; i < b.size(); ++i) bm[i] = b[i] * inv % p;
        Poly r = poly_trim(poly_mod(a, bm, p));
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool poly_is_irreducible(const Poly& f, std::int64_t p) {
    const int deg = static_cast<int>(f.size()) - 1;
    // x^(p^deg) == x mod f, and gcd(x^(p^(deg/r)) - x, f) = 1 for prime r | deg
    Poly xp = poly_x_pow_p_tower(f, p, deg);
    Poly x = poly_mod(Poly{0, 1}, f, p);
    Poly diff(std::max(xp.size(), x.size()), 0);
    for (std::size_t i = 0; i < diff.size(); ++i) {
        const std::int64_t a = i < xp.size() ? xp[i] : 0;
        const std::int64_t b = i < x.size() ? x[i] : 0;
        diff[i] = ((a - b) % p + p) % p;
    }
    if (!poly_trim(diff).empty()) return false;
    for (const auto& [r, e] : factorize(deg)) {
        Poly xq = poly_x_pow_p_tower(f, p, deg / static_cast<int>(r));
        Poly d2(std::max(xq.size(), x.size()), 0);
        for (std::size_t i = 0; i < d2.size(); ++i) {
            const std::int64_t a = i < xq.size() ? xq[i] : 0;
            const std::int64_t b = i < x.size() ? x[i] : 0;
            d2[i] = ((a - b) % p + p) % p;
        }
        const Poly g = poly_gcd(d2, f, p);
        if (!(g.size() == 1)) return false;   // gcd must be a unit
    }
    return true;
}

// Lexicographically first monic irreducible of degree d over GF(p).
Poly find_irreducible(std::int64_t p, int d) {
    std::uint64_t combos = 1;
    for (int i = 0; i < d; ++i) combos *= static_cast<std::uint64_t>(p);
    for (std::uint64_t code = 0; code < combos; ++code) {
        Poly f(d + 1, 0);
        std::uint64_t v = code;
        for (int i = 0; i < d; ++i) {
            f[i] = static_cast<std::int64_t>(v % p);
            v /= p;
        }
        f[d] = 1;
        if (poly_is_irreducible(f, p)) return f;
    }
    throw std::logic_error("no irreducible polynomial found");
}

Field make_field(std::int64_t p, int d) {
    Field F;
    F.p = p;
    F.d = d;
    F.irred = find_irreducible(p, d);
    F.order = 1;
    for (int i = 0; i < d; ++i) F.order *= p;
    return F;
}

// First element (by encoding) of multiplicative order p^d - 1.
Field::Elt find_primitive(const Field& F) {
    const std::int64_t N = F.order - 1;
    const auto factors = factorize(N);
    for (std::uint64_t code = 2; code < static_cast<std::uint64_t>(F.order); ++code) {
        const Field::Elt g = F.decode(code);
        bool ok = true;
        for (const auto& [r, e] : factors) {
            if (F.encode(F.pow(g, N / r)) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    throw std::logic_error("no primitive element found");
}

// ----------------------------------------------------------------- verifier

void require(bool cond, const char* msg) {
    if (!cond) throw std::logic_error(msg);
}

// ------------------------------------------------------------------ behrend

// Digit-cube sphere construction: digits below dd in base 2dd-1 are
// carry-free under addition, and a sphere contains no 3-AP.
ResidueSet behrend_sweep(std::int64_t n) {
    std::vector<std::int64_t> best;
    const int kmax = std::max(2, static_cast<int>(std::ceil(std::log2(std::max<std::int64_t>(n, 2)))));
    for (int k = 2; k <= kmax; ++k) {
        const std::int64_t dmax =
            static_cast<std::int64_t>(std::ceil(std::pow(static_cast<double>(n), 1.0 / k))) + 1;
        for (std::int64_t dd = 2; dd <= dmax; ++dd) {
            const std::int64_t base = 2 * dd - 1;
            // capacity: 1 + (base^k - 1)/2 must stay within [1, n]
            double cap_check = 1;
            for (int i = 0; i < k; ++i) cap_check *= static_cast<double>(base);
            if ((cap_check - 1) / 2 + 1 > static_cast<double>(n)) break;
            std::uint64_t combos = 1;
            for (int i = 0; i < k; ++i) combos *= static_cast<std::uint64_t>(dd);
            if (combos > 8'000'000ULL) break;

            // pass 1: sphere populations
            std::unordered_map<std::int64_t, std::uint32_t> pop;
            for (std::uint64_t code = 0; code < combos; ++code) {
                std::uint64_t v = code;
                std::int64_t norm = 0;
                for (int i = 0; i < k; ++i) {
                    const std::int64_t digit = static_cast<std::int64_t>(v % dd);
                    v /= dd;
                    norm += digit * digit;
                }
                ++pop[norm];
            }
            std::int64_t best_norm = -1;
            std::uint32_t best_pop = 0;
            for (const auto& [norm, cnt] : pop) {
                if (cnt > best_pop || (cnt == best_pop && (best_norm < 0 || norm < best_norm))) {
                    best_pop = cnt;
                    best_norm = norm;
                }
            }
            if (best_pop <= best.size()) continue;
            // pass 2: materialize the best sphere
            std::vector<std::int64_t> cand;
            cand.reserve(best_pop);
            for (std::uint64_t code = 0; code < combos; ++code) {
                std::uint64_t v = code;
                std::int64_t norm = 0, value = 0, scale = 1;
                for (int i = 0; i < k; ++i) {
                    const std::int64_t digit = static_cast<std::int64_t>(v % dd);
                    v /= dd;
                    norm += digit * digit;
                    value += digit * scale;
                    scale *= base;
                }
                if (norm == best_norm) cand.push_back(value + 1);
            }
            std::sort(cand.begin(), cand.end());
            best = std::move(cand);
        }
    }
    if (best.empty()) best = {1};
    return {best, std::nullopt, std::nullopt};
}

}  // namespace

bool is_prime_power(std::int64_t q) {
    if (q < 2) return false;
    return factorize(q).size() == 1;
}

bool is_3ap_free(const ResidueSet& s) {
    std::unordered_set<std::int64_t> members(s.elements.begin(), s.elements.end());
    const auto& e = s.elements;
    for (std::size_t i = 0; i < e.size(); ++i) {
        for (std::size_t j = i + 1; j < e.size(); ++j) {
            const std::int64_t sum = e[i] + e[j];
            if (sum % 2 == 0 && members.count(sum / 2) && sum / 2 != e[i] && sum / 2 != e[j]) {
                return false;
            }
        }
    }
    return true;
}

std::int64_t difference_multiplicity(const ResidueSet& s) {
    const auto& e = s.elements;
    if (e.size() < 2) return 0;
    std::unordered_map<std::int64_t, std::int64_t> cnt;
    if (s.modulus) {
        const std::int64_t m = *s.modulus;
        for (std::size_t i = 0; i < e.size(); ++i) {
            for (std::size_t j = 0; j < e.size(); ++j) {
                if (i == j) continue;
                ++cnt[((e[i] - e[j]) % m + m) % m];
            }
        }
    } else {
        // Interval semantics; positive differences suffice by symmetry.
        for (std::size_t i = 0; i < e.size(); ++i) {
            for (std::size_t j = i + 1; j < e.size(); ++j) ++cnt[e[j] - e[i]];
        }
    }
    std::int64_t mx = 0;
    for (const auto& [d, c] : cnt) mx = std::max(mx, c);
    return mx;
}

ResidueSet max_3ap_free_exhaustive(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (n >= 64) throw std::invalid_argument("exhaustive 3-AP search limited to n < 64");
    const std::uint64_t full = (1ULL << n) - 1;

    // Incumbent from the digit-sphere sweep keeps the search tree shallow.
    std::vector<std::int64_t> best = behrend_sweep(n).elements;
    std::uint64_t best_size = best.size();

    std::vector<std::int64_t> chosen;
    std::vector<std::int64_t> best_stack;
    bool improved = false;

    // DFS over values 1..n; forbidden marks future values completing a 3-AP.
    auto dfs = [&](auto&& self, std::int64_t v, std::uint64_t forbidden) -> void {
        if (v > n) {
            if (chosen.size() > best_size) {
                best_size = chosen.size();
                best_stack = chosen;
                improved = true;
            }
            return;
        }
        const std::uint64_t future = full & ~((1ULL << (v - 1)) - 1);
        const std::uint64_t avail = future & ~forbidden;
        if (chosen.size() + static_cast<std::uint64_t>(std::popcount(avail)) <= best_size) return;
        if (!(forbidden & (1ULL << (v - 1)))) {
            std::uint64_t nf = forbidden;
            for (std::int64_t a : chosen) {
                const std::int64_t c = 2 * v - a;
                if (c <= n) nf |= 1ULL << (c - 1);
            }
            chosen.push_back(v);
            self(self, v + 1, nf);
            chosen.pop_back();
        }
        self(self, v + 1, forbidden);
    };
    dfs(dfs, 1, 0);

    if (improved) best = best_stack;
    std::sort(best.begin(), best.end());
    ResidueSet out{best, std::nullopt, std::nullopt};
    require(is_3ap_free(out), "exhaustive 3-AP-free search produced an invalid set");
    return out;
}

ResidueSet behrend_set(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    ResidueSet out = n < 64 ? max_3ap_free_exhaustive(n) : behrend_sweep(n);
    require(!out.elements.empty() && out.elements.front() >= 1 && out.elements.back() <= n,
            "3-AP-free set out of range");
    require(is_3ap_free(out), "3-AP-free construction failed verification");
    return out;
}

std::optional<std::int64_t> largest_singer_q(std::int64_t n) {
    for (std::int64_t q = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n))) + 1;
         q >= 2; --q) {
        if (q * q + q + 1 <= n && is_prime_power(q)) return q;
    }
    return std::nullopt;
}

ResidueSet singer_difference_set(std::int64_t q) {
    if (!is_prime_power(q)) throw NotPrimePower(std::to_string(q) + " is not a prime power");
    if (q > 128) throw GuardExceeded("singer construction limited to q <= 128");
    const auto pf = factorize(q);
    const std::int64_t p = pf[0].first;
    const int e = pf[0].second;
    const std::int64_t m = q * q + q + 1;

    const Field F = make_field(p, 3 * e);
    const Field::Elt g = find_primitive(F);

    // discrete log table over the full multiplicative group
    std::vector<std::int32_t> log_of(static_cast<std::size_t>(F.order), -1);
    Field::Elt cur = F.one();
    for (std::int64_t i = 0; i < F.order - 1; ++i) {
        log_of[F.encode(cur)] = static_cast<std::int32_t>(i);
        cur = F.mul(cur, g);
    }

    // GF(q) = {0} union the subgroup generated by g^m; the plane spanned by
    // {1, g} over GF(q) projects to q+1 residues mod m.
    std::vector<Field::Elt> subfield{F.zero()};
    const Field::Elt gm = F.pow(g, m);
    Field::Elt s = F.one();
    for (std::int64_t j = 0; j < q - 1; ++j) {
        subfield.push_back(s);
        s = F.mul(s, gm);
    }
    require(static_cast<std::int64_t>(subfield.size()) == q, "subfield size mismatch");

    std::vector<std::int64_t> residues;
    for (const auto& a : subfield) {
        for (const auto& b : subfield) {
            const Field::Elt w = F.add(a, F.mul(b, g));
            if (F.is_zero(w)) continue;
            const std::int32_t lg = log_of[F.encode(w)];
            require(lg >= 0, "log table incomplete");
            residues.push_back(lg % m);
        }
    }
    std::sort(residues.begin(), residues.end());
    residues.erase(std::unique(residues.begin(), residues.end()), residues.end());
    require(static_cast<std::int64_t>(residues.size()) == q + 1,
            "singer set has wrong size");

    // perfect difference property: every nonzero residue exactly once
    std::vector<std::int32_t> cover(static_cast<std::size_t>(m), 0);
    for (std::int64_t a : residues) {
        for (std::int64_t b : residues) {
            if (a != b) ++cover[((a - b) % m + m) % m];
        }
    }
    for (std::int64_t d = 1; d < m; ++d) {
        require(cover[d] == 1, "difference coverage is not perfect");
    }
    return {residues, m, 1};
}

ResidueSet sidon_in_interval(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    ResidueSet out;
    if (n < 7) {
        // exhaustive over subsets of [1, n]
        std::vector<std::int64_t> best;
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            std::vector<std::int64_t> cand;
            for (std::int64_t v = 1; v <= n; ++v) {
                if (mask & (1u << (v - 1))) cand.push_back(v);
            }
            if (cand.size() <= best.size()) continue;
            ResidueSet rs{cand, std::nullopt, std::nullopt};
            if (difference_multiplicity(rs) <= 1) best = std::move(cand);
        }
        out = {best, std::nullopt, 1};
    } else {
        const auto q = largest_singer_q(n);
        require(q.has_value(), "no prime power in range despite n >= 7");
        ResidueSet d = singer_difference_set(*q);
        std::vector<std::int64_t> lifted;
        lifted.reserve(d.elements.size());
        for (std::int64_t v : d.elements) lifted.push_back(v + 1);
        out = {std::move(lifted), std::nullopt, 1};
    }
    require(difference_multiplicity(out) <= 1, "sidon construction failed verification");
    return out;
}

ResidueSet b2_minus_g_set(std::int64_t n, std::int64_t g) {
    if (n < 1 || g < 1) throw std::invalid_argument("n and g must be positive");
    if (g > (std::int64_t{1} << 40) / n) {
        throw std::invalid_argument("g * n too large for the interval construction");
    }
    if (g == 1) return sidon_in_interval(n);

    // Contract a Sidon set of [1, g*n] by x -> floor((x-1)/g) + 1: every
    // difference d in the image pulls back to at most 2g-1 Sidon-distinct
    // differences, and the size stays Theta(sqrt(g n)).
    const std::int64_t N = g * n;
    ResidueSet s = sidon_in_interval(N);
    std::vector<std::int64_t> contracted;
    contracted.reserve(s.elements.size());
    for (std::int64_t x : s.elements) contracted.push_back((x - 1) / g + 1);
    std::sort(contracted.begin(), contracted.end());
    contracted.erase(std::unique(contracted.begin(), contracted.end()), contracted.end());

    ResidueSet out{std::move(contracted), std::nullopt, std::nullopt};
    const std::int64_t achieved = difference_multiplicity(out);
    require(achieved <= 2 * g, "B2^-[g] construction exceeded its multiplicity bound");
    out.claimed_g = achieved;
    return out;
}

}  // namespace gridfree
