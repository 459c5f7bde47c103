#include "core/chartab.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <unordered_map>

#include "core/errors.hpp"

namespace eichler {

namespace {

using u64 = std::uint64_t;
using Mat = std::vector<std::vector<u64>>;

// ---------------------------------------------------------------------------
// Arithmetic modulo a word-sized prime (p < 2^31, so products fit in 64 bits).
// ---------------------------------------------------------------------------

struct Fp {
    u64 p;
    u64 add(u64 a, u64 b) const {
        u64 s = a + b;
        return s >= p ? s - p : s;
    }
    u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
    u64 mul(u64 a, u64 b) const { return (a * b) % p; }
    u64 pow(u64 a, u64 e) const {
        u64 r = 1;
        a %= p;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    u64 inv(u64 a) const { return pow(a, p - 2); }
};

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Smallest prime p with p = 1 (mod exponent) and p > 2*sqrt(order); such a
// prime cannot divide the group order (every prime factor of the order
// divides the exponent) and F_p contains all needed roots of unity.
u64 choose_prime(u64 exponent, u64 order) {
    const long double bound = 2.0L * std::sqrt(static_cast<long double>(order));
    for (u64 t = 1;; ++t) {
        const u64 cand = t * exponent + 1;
        if (static_cast<long double>(cand) <= bound) continue;
        if (cand >= (1ull << 31))
            throw ResourceExceeded("no workable prime for the character computation");
        if (is_prime(cand)) return cand;
    }
}

u64 primitive_root(const Fp& F) {
    const u64 n = F.p - 1;
    std::vector<u64> primes;
    u64 m = n;
    for (u64 d = 2; d * d <= m; ++d)
        if (m % d == 0) {
            primes.push_back(d);
            while (m % d == 0) m /= d;
        }
    if (m > 1) primes.push_back(m);
    for (u64 g = 2; g < F.p; ++g) {
        bool ok = true;
        for (u64 q : primes)
            if (F.pow(g, n / q) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    throw InternalError("no primitive root found");
}

// ---------------------------------------------------------------------------
// Polynomials over F_p (coefficients ascending).
// ---------------------------------------------------------------------------

using Poly = std::vector<u64>;

// Characteristic polynomial via Hessenberg reduction (similarity transforms
// preserve it) and the standard Hessenberg recurrence.
Poly charpoly(Mat T, const Fp& F) {
    const std::size_t d = T.size();
    for (std::size_t c = 0; c + 2 <= d; ++c) {
        std::size_t piv = c + 1;
        while (piv < d && T[piv][c] == 0) ++piv;
        if (piv == d) continue;
        if (piv != c + 1) {
            std::swap(T[piv], T[c + 1]);
            for (std::size_t i = 0; i < d; ++i) std::swap(T[i][piv], T[i][c + 1]);
        }
        const u64 ipiv = F.inv(T[c + 1][c]);
        for (std::size_t r = c + 2; r < d; ++r) {
            if (T[r][c] == 0) continue;
            const u64 f = F.mul(T[r][c], ipiv);
            for (std::size_t j = 0; j < d; ++j)
                T[r][j] = F.sub(T[r][j], F.mul(f, T[c + 1][j]));
            for (std::size_t i = 0; i < d; ++i)
                T[i][c + 1] = F.add(T[i][c + 1], F.mul(f, T[i][r]));
        }
    }
    std::vector<Poly> P(d + 1);
    P[0] = {1};
    for (std::size_t k = 1; k <= d; ++k) {
        Poly q(k + 1, 0);
        const u64 a = T[k - 1][k - 1];
        for (std::size_t idx = 0; idx < P[k - 1].size(); ++idx) {
            q[idx + 1] = F.add(q[idx + 1], P[k - 1][idx]);
            q[idx] = F.sub(q[idx], F.mul(a, P[k - 1][idx]));
        }
        u64 prod = 1;
        for (std::size_t i = k - 1; i-- > 0;) {
            prod = F.mul(prod, T[i + 1][i]);
            if (prod == 0) break;
            const u64 coef = F.mul(T[i][k - 1], prod);
            if (coef == 0) continue;
            for (std::size_t idx = 0; idx < P[i].size(); ++idx)
                q[idx] = F.sub(q[idx], F.mul(coef, P[i][idx]));
        }
        P[k] = std::move(q);
    }
    return P[d];
}

std::vector<u64> poly_roots(const Poly& f, const Fp& F) {
    std::vector<u64> roots;
    for (u64 x = 0; x < F.p; ++x) {
        u64 acc = 0;
        for (std::size_t i = f.size(); i-- > 0;) acc = F.add(F.mul(acc, x), f[i]);
        if (acc == 0) roots.push_back(x);
    }
    return roots;
}

// Reduced basis of the kernel of M (free columns ascending -> deterministic).
std::vector<std::vector<u64>> nullspace(Mat M, const Fp& F) {
    const std::size_t d = M.size();
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < d && rank < d; ++c) {
        std::size_t r = rank;
        while (r < d && M[r][c] == 0) ++r;
        if (r == d) continue;
        std::swap(M[rank], M[r]);
        const u64 inv = F.inv(M[rank][c]);
        for (std::size_t j = 0; j < d; ++j) M[rank][j] = F.mul(M[rank][j], inv);
        for (std::size_t r2 = 0; r2 < d; ++r2) {
            if (r2 == rank || M[r2][c] == 0) continue;
            const u64 f = M[r2][c];
            for (std::size_t j = 0; j < d; ++j)
                M[r2][j] = F.sub(M[r2][j], F.mul(f, M[rank][j]));
        }
        pivot_cols.push_back(c);
        ++rank;
    }
    std::vector<char> is_pivot(d, 0);
    for (std::size_t c : pivot_cols) is_pivot[c] = 1;
    std::vector<std::vector<u64>> basis;
    for (std::size_t c = 0; c < d; ++c) {
        if (is_pivot[c]) continue;
        std::vector<u64> v(d, 0);
        v[c] = 1;
        for (std::size_t r = 0; r < rank; ++r) v[pivot_cols[r]] = F.sub(0, M[r][c]);
        basis.push_back(std::move(v));
    }
    return basis;
}

// ---------------------------------------------------------------------------
// Subspaces of F_p^k in reduced echelon form (canonical per subspace).
// ---------------------------------------------------------------------------

struct Subspace {
    std::vector<std::vector<u64>> basis;
    std::vector<unsigned> pivots; // ascending; basis[b][pivots[c]] = (b == c)
};

Subspace echelonize(std::vector<std::vector<u64>> vecs, const Fp& F) {
    Subspace S;
    for (auto& v : vecs) {
        for (std::size_t b = 0; b < S.basis.size(); ++b) {
            const u64 c = v[S.pivots[b]];
            if (c == 0) continue;
            for (std::size_t j = 0; j < v.size(); ++j)
                v[j] = F.sub(v[j], F.mul(c, S.basis[b][j]));
        }
        std::size_t piv = 0;
        while (piv < v.size() && v[piv] == 0) ++piv;
        if (piv == v.size())
            throw InternalError("dependent vectors in eigenspace basis");
        const u64 inv = F.inv(v[piv]);
        for (auto& x : v) x = F.mul(x, inv);
        for (std::size_t b = 0; b < S.basis.size(); ++b) {
            const u64 c = S.basis[b][piv];
            if (c == 0) continue;
            for (std::size_t j = 0; j < v.size(); ++j)
                S.basis[b][j] = F.sub(S.basis[b][j], F.mul(c, v[j]));
        }
        std::size_t pos = 0;
        while (pos < S.pivots.size() && S.pivots[pos] < piv) ++pos;
        S.basis.insert(S.basis.begin() + pos, std::move(v));
        S.pivots.insert(S.pivots.begin() + pos, static_cast<unsigned>(piv));
    }
    return S;
}

// Matrix of B restricted to the invariant subspace S (throws if S is not
// actually invariant).
Mat restrict_operator(const Mat& B, const Subspace& S, const Fp& F) {
    const std::size_t d = S.basis.size();
    const std::size_t k = B.size();
    Mat T(d, std::vector<u64>(d, 0));
    for (std::size_t c = 0; c < d; ++c) {
        std::vector<u64> u(k, 0);
        for (std::size_t j = 0; j < k; ++j) {
            u64 acc = 0;
            for (std::size_t l = 0; l < k; ++l)
                acc = F.add(acc, F.mul(B[j][l], S.basis[c][l]));
            u[j] = acc;
        }
        for (std::size_t b = 0; b < d; ++b) T[b][c] = u[S.pivots[b]];
        std::vector<u64> w(k, 0);
        for (std::size_t b = 0; b < d; ++b) {
            if (T[b][c] == 0) continue;
            for (std::size_t j = 0; j < k; ++j)
                w[j] = F.add(w[j], F.mul(T[b][c], S.basis[b][j]));
        }
        if (w != u) throw InternalError("class operator does not preserve subspace");
    }
    return T;
}

} // namespace

// ---------------------------------------------------------------------------
// CharacterTable
// ---------------------------------------------------------------------------

std::shared_ptr<const CharacterTable>
CharacterTable::of(std::shared_ptr<const ConjugacyClasses> classes, const Config& cfg) {
    static std::unordered_map<const ConjugacyClasses*,
                              std::shared_ptr<const CharacterTable>>
        cache;
    if (auto it = cache.find(classes.get()); it != cache.end()) return it->second;
    auto t = std::shared_ptr<CharacterTable>(new CharacterTable());
    t->classes_ = std::move(classes);
    if (t->classes_->is_product())
        t->compute_product(cfg);
    else
        t->compute_raw(cfg);
    cache.emplace(t->classes_.get(), t);
    return t;
}

void CharacterTable::compute_raw(const Config& cfg) {
    const ConjugacyClasses& C = *classes_;
    const unsigned k = C.count();
    if (k > cfg.max_chartab_classes)
        throw ResourceExceeded("class count " + std::to_string(k) +
                               " exceeds max_chartab_classes");
    if (!C.has_member_lists())
        throw InternalError("direct character computation needs class member lists");
    const u64 order = C.group_order();

    u64 exponent = 1;
    for (unsigned j = 0; j < k; ++j)
        exponent = std::lcm(exponent, C.rep_order(j));
    const Fp F{choose_prime(exponent, order)};
    const u64 gen = primitive_root(F);

    std::vector<u64> csize(k), csize_inv(k);
    for (unsigned j = 0; j < k; ++j) {
        csize[j] = C.size(j) % F.p;
        csize_inv[j] = F.inv(csize[j]);
    }

    // B_i[j][l] = #{ x in class i : x^-1 * rep(l) lies in class j }; the
    // common eigenvectors of all B_i are the central characters.
    auto class_matrix = [&](unsigned i) {
        Mat B(k, std::vector<u64>(k, 0));
        for (std::uint32_t idx : C.members(i)) {
            const Perm xinv = C.element(idx).inverse();
            for (unsigned l = 0; l < k; ++l) {
                const unsigned j = C.class_of(xinv * C.rep(l));
                B[j][l] = F.add(B[j][l], 1);
            }
        }
        return B;
    };

    // Split the common eigenspaces, one class operator at a time.
    std::vector<Subspace> spaces(1);
    spaces[0].basis.assign(k, std::vector<u64>(k, 0));
    for (unsigned j = 0; j < k; ++j) {
        spaces[0].basis[j][j] = 1;
        spaces[0].pivots.push_back(j);
    }
    for (unsigned i = 1; i < k; ++i) {
        bool split_done = true;
        for (const auto& S : spaces)
            if (S.basis.size() > 1) split_done = false;
        if (split_done) break;
        const Mat B = class_matrix(i);
        std::vector<Subspace> next;
        for (auto& S : spaces) {
            const std::size_t d = S.basis.size();
            if (d == 1) {
                next.push_back(std::move(S));
                continue;
            }
            const Mat T = restrict_operator(B, S, F);
            const Poly cp = charpoly(T, F);
            std::size_t found = 0;
            for (u64 lam : poly_roots(cp, F)) {
                Mat M = T;
                for (std::size_t b = 0; b < d; ++b) M[b][b] = F.sub(M[b][b], lam);
                const auto kb = nullspace(M, F);
                if (kb.empty())
                    throw InternalError("eigenvalue without eigenvector");
                std::vector<std::vector<u64>> lifted;
                for (const auto& kv : kb) {
                    std::vector<u64> w(k, 0);
                    for (std::size_t b = 0; b < d; ++b) {
                        if (kv[b] == 0) continue;
                        for (unsigned j = 0; j < k; ++j)
                            w[j] = F.add(w[j], F.mul(kv[b], S.basis[b][j]));
                    }
                    lifted.push_back(std::move(w));
                }
                next.push_back(echelonize(std::move(lifted), F));
                found += kb.size();
            }
            if (found != d)
                throw InternalError("class operator failed to diagonalize");
        }
        spaces = std::move(next);
    }
    if (spaces.size() != k)
        throw InternalError("character splitting incomplete");

    // Normalize each line to omega(identity class) = 1 and recover degrees
    // from sum_j omega_j omega_{j*} / |C_j| = |G| / d^2.
    std::vector<std::vector<u64>> omegas;
    for (const auto& S : spaces) {
        std::vector<u64> v = S.basis[0];
        if (v[0] == 0) throw InternalError("central character vanishes at identity");
        const u64 scale = F.inv(v[0]);
        for (auto& x : v) x = F.mul(x, scale);
        omegas.push_back(std::move(v));
    }

    std::vector<u64> degs_p;
    degrees_.clear();
    for (const auto& w : omegas) {
        u64 s = 0;
        for (unsigned j = 0; j < k; ++j)
            s = F.add(s, F.mul(w[j], F.mul(w[C.inverse_class(j)], csize_inv[j])));
        if (s == 0) throw InternalError("degree equation degenerate");
        const u64 d2 = F.mul(order % F.p, F.inv(s));
        u64 deg = 0;
        for (u64 t = 1; t * t <= order; ++t)
            if (F.mul(t % F.p, t % F.p) == d2) {
                deg = t;
                break;
            }
        if (deg == 0) throw InternalError("no integer degree matches");
        degrees_.push_back(deg);
        degs_p.push_back(deg % F.p);
    }

    // Values mod p, then the exact cyclotomic lift: for g of order n the
    // value is sum_t mu_t zeta_n^t where mu_t is the multiplicity of the
    // eigenvalue zeta_n^t, recovered by an inverse DFT over F_p.
    std::vector<std::vector<unsigned>> power_classes(k);
    std::map<unsigned, std::vector<u64>> theta_pows;
    for (unsigned j = 0; j < k; ++j) {
        const unsigned n = static_cast<unsigned>(C.rep_order(j));
        power_classes[j].resize(n);
        for (unsigned s = 0; s < n; ++s)
            power_classes[j][s] = C.power_class(j, s);
        if (!theta_pows.count(n)) {
            std::vector<u64> pows(n);
            const u64 theta = F.pow(gen, (F.p - 1) / n);
            pows[0] = 1;
            for (unsigned s = 1; s < n; ++s) pows[s] = F.mul(pows[s - 1], theta);
            theta_pows.emplace(n, std::move(pows));
        }
    }

    values_.assign(k, std::vector<Cyclotomic>(k));
    for (unsigned i = 0; i < k; ++i) {
        std::vector<u64> valp(k);
        for (unsigned j = 0; j < k; ++j)
            valp[j] = F.mul(degs_p[i], F.mul(omegas[i][j], csize_inv[j]));
        for (unsigned j = 0; j < k; ++j) {
            const unsigned n = static_cast<unsigned>(C.rep_order(j));
            const auto& pows = theta_pows.at(n);
            const u64 ninv = F.inv(n % F.p);
            Cyclotomic acc;
            u64 musum = 0;
            for (unsigned t = 0; t < n; ++t) {
                u64 s_acc = 0;
                for (unsigned s = 0; s < n; ++s) {
                    const u64 e = (static_cast<u64>(n - t) * s) % n;
                    s_acc = F.add(s_acc, F.mul(valp[power_classes[j][s]], pows[e]));
                }
                const u64 mu = F.mul(ninv, s_acc);
                if (mu == 0) continue;
                if (mu > degrees_[i])
                    throw InternalError("eigenvalue multiplicity out of range");
                musum += mu;
                acc = acc + Cyclotomic::root_of_unity(n, t) *
                                static_cast<long long>(mu);
            }
            if (musum != degrees_[i])
                throw InternalError("eigenvalue multiplicities do not sum to degree");
            values_[i][j] = acc.reduced();
        }
    }

    sort_rows();
    compute_indicators();
    verify();
}

void CharacterTable::compute_product(const Config& cfg) {
    const auto& fcls = classes_->factors();
    for (const auto& fc : fcls) factors_.push_back(CharacterTable::of(fc, cfg));

    const unsigned k = classes_->count();
    std::uint64_t total = 1;
    for (const auto& f : factors_) total *= f->count();
    if (total != k) throw InternalError("product table row count mismatch");

    row_tuples_.assign(k, std::vector<unsigned>(factors_.size(), 0));
    degrees_.assign(k, 1);
    std::vector<unsigned> tup(factors_.size(), 0);
    for (unsigned i = 0; i < k; ++i) {
        row_tuples_[i] = tup;
        std::uint64_t d = 1;
        for (std::size_t f = 0; f < factors_.size(); ++f)
            d *= factors_[f]->degree(tup[f]);
        degrees_[i] = d;
        for (std::size_t f = factors_.size(); f-- > 0;) {
            if (++tup[f] < factors_[f]->count()) break;
            tup[f] = 0;
        }
    }

    sort_rows();
    compute_indicators();

    std::uint64_t sum = 0;
    for (std::uint64_t d : degrees_) sum += d * d;
    if (sum != classes_->group_order())
        throw InternalError("degree equation fails for product table");
}

Cyclotomic CharacterTable::value(unsigned chi, unsigned cls) const {
    if (factors_.empty()) return values_[chi][cls];
    const auto& rt = row_tuples_[chi];
    const auto& ct = classes_->tuple_of(cls);
    Cyclotomic v = Cyclotomic::integer(1);
    for (std::size_t f = 0; f < factors_.size(); ++f)
        v = v * factors_[f]->value(rt[f], ct[f]);
    return v;
}

void CharacterTable::sort_rows() {
    const unsigned k = count();
    std::vector<unsigned> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    auto value_at = [&](unsigned row, unsigned cls) {
        if (factors_.empty()) return values_[row][cls];
        Cyclotomic v = Cyclotomic::integer(1);
        const auto& ct = classes_->tuple_of(cls);
        for (std::size_t f = 0; f < factors_.size(); ++f)
            v = v * factors_[f]->value(row_tuples_[row][f], ct[f]);
        return v;
    };
    std::sort(idx.begin(), idx.end(), [&](unsigned a, unsigned b) {
        if (degrees_[a] != degrees_[b]) return degrees_[a] < degrees_[b];
        for (unsigned c = 0; c < k; ++c) {
            const Cyclotomic va = value_at(a, c), vb = value_at(b, c);
            if (va != vb) return va < vb;
        }
        return false;
    });
    std::vector<std::uint64_t> nd(k);
    for (unsigned i = 0; i < k; ++i) nd[i] = degrees_[idx[i]];
    degrees_ = std::move(nd);
    if (factors_.empty()) {
        std::vector<std::vector<Cyclotomic>> nv(k);
        for (unsigned i = 0; i < k; ++i) nv[i] = std::move(values_[idx[i]]);
        values_ = std::move(nv);
    } else {
        std::vector<std::vector<unsigned>> nt(k);
        for (unsigned i = 0; i < k; ++i) nt[i] = std::move(row_tuples_[idx[i]]);
        row_tuples_ = std::move(nt);
    }
}

// Indicators come from the squaring-class sum (1/|G|) sum_g chi(g^2), which
// must be exactly -1, 0 or 1; anything else means the table is wrong.
void CharacterTable::compute_indicators() {
    const unsigned k = count();
    const ConjugacyClasses& C = *classes_;
    indicators_.assign(k, 0);
    const Cyclotomic zero;
    for (unsigned i = 0; i < k; ++i) {
        Cyclotomic acc;
        for (unsigned j = 0; j < k; ++j)
            acc = acc + value(i, C.squaring_class(j)) *
                            static_cast<long long>(C.size(j));
        if (acc == zero) {
            indicators_[i] = 0;
        } else if (acc == Cyclotomic::integer(static_cast<long long>(C.group_order()))) {
            indicators_[i] = 1;
        } else if (acc ==
                   Cyclotomic::integer(-static_cast<long long>(C.group_order()))) {
            indicators_[i] = -1;
        } else {
            throw InternalError("indicator sum is not -|G|, 0 or |G|");
        }
    }
}

void CharacterTable::verify() const {
    const ConjugacyClasses& C = *classes_;
    const unsigned k = count();
    const long long order = static_cast<long long>(C.group_order());

    std::uint64_t degsum = 0;
    for (std::uint64_t d : degrees_) degsum += d * d;
    if (degsum != C.group_order())
        throw InternalError("degree equation fails");

    unsigned trivial_rows = 0;
    const Cyclotomic one = Cyclotomic::integer(1);
    for (unsigned i = 0; i < k; ++i) {
        bool all_one = true;
        for (unsigned j = 0; j < k && all_one; ++j) all_one = value(i, j) == one;
        trivial_rows += all_one;
    }
    if (trivial_rows != 1) throw InternalError("trivial character not unique");

    auto inner = [&](unsigned a, unsigned b) {
        Cyclotomic acc;
        for (unsigned j = 0; j < k; ++j)
            acc = acc + value(a, j) * value(b, j).conjugate() *
                            static_cast<long long>(C.size(j));
        return acc;
    };
    for (unsigned i = 0; i < k; ++i)
        if (inner(i, i) != Cyclotomic::integer(order))
            throw InternalError("row norm is not |G|");
    if (k <= 64) {
        const Cyclotomic zero;
        for (unsigned a = 0; a < k; ++a)
            for (unsigned b = a + 1; b < k; ++b)
                if (inner(a, b) != zero)
                    throw InternalError("rows are not orthogonal");
    }
}

unsigned CharacterTable::quaternionic_count() const {
    unsigned cnt = 0;
    for (unsigned i = 0; i < count(); ++i)
        cnt += degrees_[i] == 2 && indicators_[i] == -1;
    return cnt;
}

unsigned CharacterTable::quaternionic_count_of_quotient(
    const std::vector<unsigned>& kernel_classes) const {
    const Cyclotomic two = Cyclotomic::integer(2);
    unsigned cnt = 0;
    for (unsigned i = 0; i < count(); ++i) {
        if (degrees_[i] != 2 || indicators_[i] != -1) continue;
        bool contained = true;
        for (unsigned j : kernel_classes)
            if (value(i, j) != two) {
                contained = false;
                break;
            }
        cnt += contained;
    }
    return cnt;
}

// ---------------------------------------------------------------------------
// Counting helpers
// ---------------------------------------------------------------------------

std::uint64_t real_linear_character_count(const Group& g) {
    std::uint64_t r = 1;
    for (std::uint64_t d : g.perm.abelian_invariants())
        if (d % 2 == 0) r *= 2;
    return r;
}

std::uint64_t quaternionic_character_count(const Group& g, const Config& cfg) {
    if (g.perm.is_abelian()) return 0;
    if (!g.factors.empty()) {
        const std::size_t n = g.factors.size();
        std::vector<std::uint64_t> m(n), r(n);
        for (std::size_t i = 0; i < n; ++i) {
            m[i] = quaternionic_character_count(*g.factors[i], cfg);
            r[i] = real_linear_character_count(*g.factors[i]);
        }
        std::uint64_t total = 0;
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t t = m[i];
            for (std::size_t j = 0; j < n; ++j)
                if (j != i) t *= r[j];
            total += t;
        }
        return total;
    }
    return CharacterTable::of(g.classes(), cfg)->quaternionic_count();
}

} // namespace eichler
