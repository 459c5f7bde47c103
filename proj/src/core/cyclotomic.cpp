#include "core/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "core/errors.hpp"

namespace eichler {

namespace {

unsigned euler_phi(unsigned n) {
    unsigned result = n;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        result -= result / p;
        while (n % p == 0) n /= p;
    }
    if (n > 1) result -= result / n;
    return result;
}

// exact division of polynomials over Z (divisor monic), lowest degree first
std::vector<long long> poly_divide(std::vector<long long> num,
                                   const std::vector<long long>& den) {
    std::vector<long long> q(num.size() - den.size() + 1, 0);
    for (std::size_t i = q.size(); i-- > 0;) {
        long long c = num[i + den.size() - 1];
        q[i] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
    }
    for (long long c : num)
        if (c != 0) throw InternalError("inexact cyclotomic polynomial division");
    return q;
}

// reduce a polynomial modulo the monic polynomial `mod`, in place
void poly_mod(std::vector<long long>& p, const std::vector<long long>& mod) {
    std::size_t deg = mod.size() - 1;
    for (std::size_t i = p.size(); i-- > deg;) {
        long long c = p[i];
        if (c == 0) continue;
        p[i] = 0;
        for (std::size_t j = 0; j < deg; ++j) p[i - deg + j] -= c * mod[j];
    }
    p.resize(deg);
}

struct Frac {
    long long num = 0, den = 1;
};

struct FracOverflow {};

long long checked_mul(long long a, long long b) {
    __int128 r = static_cast<__int128>(a) * b;
    if (r > INT64_MAX || r < INT64_MIN) throw FracOverflow{};
    return static_cast<long long>(r);
}

long long checked_add(long long a, long long b) {
    __int128 r = static_cast<__int128>(a) + b;
    if (r > INT64_MAX || r < INT64_MIN) throw FracOverflow{};
    return static_cast<long long>(r);
}

Frac normalize(Frac f) {
    if (f.den == 0) throw InternalError("zero denominator");
    if (f.num == 0) return {0, 1};
    long long g = std::gcd(std::abs(f.num), std::abs(f.den));
    f.num /= g;
    f.den /= g;
    if (f.den < 0) {
        f.num = -f.num;
        f.den = -f.den;
    }
    return f;
}

Frac sub_mul(const Frac& a, const Frac& f, const Frac& b) {
    // a - f*b
    Frac prod{checked_mul(f.num, b.num), checked_mul(f.den, b.den)};
    prod = normalize(prod);
    Frac r{checked_add(checked_mul(a.num, prod.den), -checked_mul(prod.num, a.den)),
           checked_mul(a.den, prod.den)};
    return normalize(r);
}

Frac divide(const Frac& a, const Frac& b) {
    if (b.num == 0) throw InternalError("division by zero fraction");
    return normalize({checked_mul(a.num, b.den), checked_mul(a.den, b.num)});
}

} // namespace

std::vector<long long> cyclotomic_polynomial(unsigned n) {
    static std::map<unsigned, std::vector<long long>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    if (n == 0) throw ValidationError("cyclotomic polynomial needs n >= 1");
    std::vector<long long> result;
    if (n == 1) {
        result = {-1, 1};
    } else {
        std::vector<long long> num(n + 1, 0);
        num[0] = -1;
        num[n] = 1;
        for (unsigned d = 1; d < n; ++d)
            if (n % d == 0) num = poly_divide(std::move(num), cyclotomic_polynomial(d));
        result = std::move(num);
    }
    cache[n] = result;
    return result;
}

Cyclotomic::Cyclotomic() = default;

Cyclotomic Cyclotomic::integer(long long v) { return Cyclotomic(1, {v}); }

Cyclotomic Cyclotomic::from_coeffs(unsigned conductor, std::vector<long long> coeffs) {
    if (conductor == 0) throw ValidationError("conductor must be positive");
    unsigned phi = euler_phi(conductor);
    if (coeffs.size() != phi)
        throw ValidationError("coefficient vector length must be phi(conductor)");
    return Cyclotomic(conductor, std::move(coeffs));
}

Cyclotomic Cyclotomic::root_of_unity(unsigned n, long long k) {
    if (n == 0) throw ValidationError("root of unity needs n >= 1");
    long long kk = k % static_cast<long long>(n);
    if (kk < 0) kk += n;
    unsigned g = std::gcd(n, static_cast<unsigned>(kk));
    if (kk == 0) g = n;
    unsigned order = n / g;
    unsigned expo = static_cast<unsigned>(kk) / g;
    if (order == 1) return integer(1);
    std::vector<long long> p(order, 0);
    p[expo] = 1;
    poly_mod(p, cyclotomic_polynomial(order));
    return Cyclotomic(order, std::move(p)).reduced();
}

bool Cyclotomic::is_zero() const {
    for (long long c : c_)
        if (c != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

long long Cyclotomic::rational_value() const {
    Cyclotomic r = reduced();
    if (!r.is_rational()) throw ValidationError("value is not rational: " + to_string());
    return r.c_[0];
}

Cyclotomic Cyclotomic::embedded(unsigned m) const {
    if (m == n_) return *this;
    if (m % n_ != 0) throw InternalError("embedding requires a conductor multiple");
    unsigned step = m / n_;
    std::vector<long long> p(m, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) p[i * step] = c_[i];
    poly_mod(p, cyclotomic_polynomial(m));
    return Cyclotomic(m, std::move(p));
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    unsigned m = std::lcm(n_, o.n_);
    Cyclotomic a = embedded(m), b = o.embedded(m);
    for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
    return a;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (long long& c : r.c_) c = -c;
    return r;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    unsigned m = std::lcm(n_, o.n_);
    Cyclotomic a = embedded(m), b = o.embedded(m);
    std::vector<long long> p(2 * a.c_.size(), 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            __int128 v = static_cast<__int128>(p[i + j]) +
                         static_cast<__int128>(a.c_[i]) * b.c_[j];
            if (v > INT64_MAX || v < INT64_MIN)
                throw ResourceExceeded("cyclotomic coefficient overflow");
            p[i + j] = static_cast<long long>(v);
        }
    }
    poly_mod(p, cyclotomic_polynomial(m));
    return Cyclotomic(m, std::move(p));
}

Cyclotomic Cyclotomic::operator*(long long k) const {
    Cyclotomic r = *this;
    for (long long& c : r.c_) {
        __int128 v = static_cast<__int128>(c) * k;
        if (v > INT64_MAX || v < INT64_MIN)
            throw ResourceExceeded("cyclotomic coefficient overflow");
        c = static_cast<long long>(v);
    }
    return r;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
    unsigned m = std::lcm(n_, o.n_);
    return embedded(m).c_ == o.embedded(m).c_;
}

bool Cyclotomic::operator<(const Cyclotomic& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    return c_ < o.c_;
}

Cyclotomic Cyclotomic::galois(unsigned t) const {
    t %= n_;
    if (std::gcd(t, n_) != 1)
        throw ValidationError("Galois twist requires an exponent coprime to the conductor");
    if (n_ == 1) return *this;
    std::vector<long long> p(n_, 0);
    for (std::size_t i = 0; i < c_.size(); ++i)
        p[(i * t) % n_] += c_[i];
    poly_mod(p, cyclotomic_polynomial(n_));
    return Cyclotomic(n_, std::move(p));
}

Cyclotomic Cyclotomic::conjugate() const {
    if (n_ == 1) return *this;
    return galois(n_ - 1);
}

Cyclotomic Cyclotomic::reduced() const {
    if (n_ == 1) return *this;
    if (is_rational()) return Cyclotomic(1, {c_[0]});
    for (unsigned d = 2; d < n_; ++d) {
        if (n_ % d != 0 || d % 4 == 2) continue;
        // invariance under Gal(Q(zeta_n)/Q(zeta_d)) = { t = 1 mod d }
        bool invariant = true;
        for (unsigned t = 1 + d; t < n_ && invariant; t += d)
            if (std::gcd(t, n_) == 1 && !(galois(t).c_ == c_)) invariant = false;
        if (!invariant) continue;

        // basis change: express the value in powers of zeta_d
        unsigned phi_n = static_cast<unsigned>(c_.size());
        unsigned phi_d = euler_phi(d);
        std::vector<std::vector<long long>> cols;
        for (unsigned j = 0; j < phi_d; ++j) {
            std::vector<long long> p(n_, 0);
            p[(static_cast<std::size_t>(j) * (n_ / d)) % n_] = 1;
            poly_mod(p, cyclotomic_polynomial(n_));
            cols.push_back(std::move(p));
        }
        try {
            // Gaussian elimination on the phi_n x (phi_d + 1) system
            std::vector<std::vector<Frac>> m(phi_n, std::vector<Frac>(phi_d + 1));
            for (unsigned r = 0; r < phi_n; ++r) {
                for (unsigned j = 0; j < phi_d; ++j) m[r][j] = {cols[j][r], 1};
                m[r][phi_d] = {c_[r], 1};
            }
            std::vector<int> pivot_col(phi_n, -1);
            unsigned rank = 0;
            for (unsigned col = 0; col < phi_d && rank < phi_n; ++col) {
                unsigned sel = rank;
                while (sel < phi_n && m[sel][col].num == 0) ++sel;
                if (sel == phi_n) continue;
                std::swap(m[sel], m[rank]);
                for (unsigned r = 0; r < phi_n; ++r) {
                    if (r == rank || m[r][col].num == 0) continue;
                    Frac f = divide(m[r][col], m[rank][col]);
                    for (unsigned j = col; j <= phi_d; ++j)
                        m[r][j] = sub_mul(m[r][j], f, m[rank][j]);
                }
                pivot_col[rank] = static_cast<int>(col);
                ++rank;
            }
            bool consistent = true;
            for (unsigned r = rank; r < phi_n; ++r)
                if (m[r][phi_d].num != 0) consistent = false;
            if (!consistent)
                throw InternalError("invariant value failed to descend conductors");
            std::vector<long long> x(phi_d, 0);
            for (unsigned r = 0; r < rank; ++r) {
                Frac v = divide(m[r][phi_d], m[r][pivot_col[r]]);
                if (v.den != 1)
                    throw InternalError("conductor descent produced a non-integer");
                x[pivot_col[r]] = v.num;
            }
            return Cyclotomic(d, std::move(x));
        } catch (const FracOverflow&) {
            return *this; // keep the larger conductor rather than risk overflow
        }
    }
    return *this;
}

std::string Cyclotomic::to_string() const {
    Cyclotomic r = reduced();
    if (r.is_rational()) return std::to_string(r.c_[0]);
    std::string out;
    for (std::size_t i = 0; i < r.c_.size(); ++i) {
        long long c = r.c_[i];
        if (c == 0) continue;
        if (i == 0) {
            out = std::to_string(c);
            continue;
        }
        if (c > 0 && !out.empty()) out += "+";
        if (c == -1)
            out += "-";
        else if (c != 1)
            out += std::to_string(c) + "*";
        out += "z" + std::to_string(r.n_);
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

} // namespace eichler
