#include "nichols/scalars.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "nichols/expression.hpp"

namespace nichols {

namespace {

using Poly = std::vector<mpq_class>;

/// Per-conductor tables: phi(m), Phi_m and zeta^k reduced for k in [0, m).
struct FieldData {
    int m = 1;
    int phi = 1;
    std::vector<long> cyclotomic; // Phi_m, low degree first, monic
    std::vector<Poly> powers;     // powers[k] = zeta^k in the power basis
};

std::vector<long> poly_divide_exact(std::vector<long> num, const std::vector<long>& den)
{
    // den is monic
    std::size_t dn = den.size() - 1;
    std::vector<long> quot(num.size() - dn, 0);
    for (std::size_t i = num.size(); i-- > dn;) {
        long c = num[i];
        quot[i - dn] = c;
        if (c == 0)
            continue;
        for (std::size_t j = 0; j <= dn; ++j)
            num[i - dn + j] -= c * den[j];
    }
    return quot;
}

const FieldData& field_data(int m);

std::vector<long> cyclotomic_poly(int m)
{
    std::vector<long> p(static_cast<std::size_t>(m) + 1, 0);
    p[0] = -1;
    p[static_cast<std::size_t>(m)] = 1;
    for (int d = 1; d < m; ++d)
        if (m % d == 0)
            p = poly_divide_exact(p, field_data(d).cyclotomic);
    return p;
}

std::unique_ptr<FieldData> build_field(int m)
{
    auto f = std::make_unique<FieldData>();
    f->m = m;
    f->cyclotomic = cyclotomic_poly(m);
    f->phi = static_cast<int>(f->cyclotomic.size()) - 1;
    const auto phi = static_cast<std::size_t>(f->phi);
    Poly cur(phi, mpq_class(0));
    cur[0] = 1;
    f->powers.reserve(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) {
        f->powers.push_back(cur);
        // multiply by x and reduce x^phi = -sum c_i x^i
        mpq_class top = cur[phi - 1];
        for (std::size_t i = phi - 1; i > 0; --i)
            cur[i] = cur[i - 1];
        cur[0] = 0;
        if (top != 0)
            for (std::size_t i = 0; i < phi; ++i)
                cur[i] -= top * f->cyclotomic[i];
    }
    return f;
}

const FieldData& field_data(int m)
{
    static std::mutex mu;
    static std::map<int, std::unique_ptr<FieldData>> cache;
    {
        std::lock_guard lock(mu);
        auto it = cache.find(m);
        if (it != cache.end())
            return *it->second;
    }
    // build outside the lock: construction recurses into smaller conductors
    auto built = build_field(m);
    std::lock_guard lock(mu);
    auto [it, inserted] = cache.emplace(m, std::move(built));
    return *it->second;
}

Poly reduce(const FieldData& f, const Poly& p)
{
    const auto phi = static_cast<std::size_t>(f.phi);
    Poly out(phi, mpq_class(0));
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0)
            continue;
        if (i < phi) {
            out[i] += p[i];
        } else {
            const Poly& z = f.powers[i % static_cast<std::size_t>(f.m)];
            for (std::size_t j = 0; j < phi; ++j)
                if (z[j] != 0)
                    out[j] += p[i] * z[j];
        }
    }
    return out;
}

void trim(Poly& p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

// Polynomial remainder and quotient over Q.
void poly_divmod(Poly a, const Poly& b, Poly& q, Poly& r)
{
    trim(a);
    q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 1, mpq_class(0));
    const mpq_class& lead = b.back();
    while (a.size() >= b.size() && !a.empty()) {
        std::size_t shift = a.size() - b.size();
        mpq_class c = a.back() / lead;
        q[shift] = c;
        for (std::size_t j = 0; j < b.size(); ++j)
            a[shift + j] -= c * b[j];
        trim(a);
    }
    r = std::move(a);
}

Poly poly_mul(const Poly& a, const Poly& b)
{
    if (a.empty() || b.empty())
        return {};
    Poly out(a.size() + b.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0)
                out[i + j] += a[i] * b[j];
    }
    return out;
}

Poly poly_sub(const Poly& a, const Poly& b)
{
    Poly out(std::max(a.size(), b.size()), mpq_class(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        out[i] -= b[i];
    trim(out);
    return out;
}

std::string render_rational(const mpq_class& q)
{
    return q.get_str();
}

} // namespace

int euler_phi(int m)
{
    return field_data(m).phi;
}

long lcm_int(long a, long b)
{
    return std::lcm(a, b);
}

CycScalar CycScalar::from_power_basis(int conductor, std::vector<mpq_class> coeffs)
{
    if (conductor < 1)
        throw Error("InvalidConductor", "conductor must be positive");
    const FieldData& f = field_data(conductor);
    for (auto& c : coeffs)
        c.canonicalize();
    if (static_cast<int>(coeffs.size()) != f.phi)
        coeffs = reduce(f, coeffs);
    return CycScalar(conductor, std::move(coeffs));
}

bool CycScalar::is_zero() const
{
    for (const auto& c : coeffs_)
        if (c != 0)
            return false;
    return true;
}

bool CycScalar::is_one() const
{
    if (coeffs_[0] != 1)
        return false;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0)
            return false;
    return true;
}

std::optional<mpq_class> CycScalar::as_rational() const
{
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0)
            return std::nullopt;
    return coeffs_[0];
}

CycScalar CycScalar::lifted(int m) const
{
    if (m == conductor_)
        return *this;
    if (m % conductor_ != 0)
        throw Error("InvalidConductor", "cannot lift conductor " + std::to_string(conductor_) +
                                            " to " + std::to_string(m));
    const FieldData& f = field_data(m);
    const int step = m / conductor_;
    const auto phi = static_cast<std::size_t>(f.phi);
    std::vector<mpq_class> out(phi, mpq_class(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0)
            continue;
        const Poly& z = f.powers[(i * static_cast<std::size_t>(step)) % static_cast<std::size_t>(m)];
        for (std::size_t j = 0; j < phi; ++j)
            if (z[j] != 0)
                out[j] += coeffs_[i] * z[j];
    }
    return CycScalar(m, std::move(out));
}

CycScalar& CycScalar::operator+=(const CycScalar& rhs)
{
    if (conductor_ == rhs.conductor_) {
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            coeffs_[i] += rhs.coeffs_[i];
        return *this;
    }
    if (rhs.conductor_ == 1) {
        coeffs_[0] += rhs.coeffs_[0];
        return *this;
    }
    const int m = static_cast<int>(lcm_int(conductor_, rhs.conductor_));
    *this = lifted(m);
    CycScalar r = rhs.lifted(m);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] += r.coeffs_[i];
    return *this;
}

CycScalar& CycScalar::operator-=(const CycScalar& rhs)
{
    return *this += -rhs;
}

CycScalar CycScalar::operator-() const
{
    CycScalar out = *this;
    for (auto& c : out.coeffs_)
        c = -c;
    return out;
}

CycScalar& CycScalar::operator*=(const CycScalar& rhs)
{
    if (rhs.conductor_ == 1) {
        for (auto& c : coeffs_)
            c *= rhs.coeffs_[0];
        return *this;
    }
    if (conductor_ == 1) {
        mpq_class s = coeffs_[0];
        *this = rhs;
        for (auto& c : coeffs_)
            c *= s;
        return *this;
    }
    const int m = static_cast<int>(lcm_int(conductor_, rhs.conductor_));
    CycScalar a = lifted(m);
    CycScalar b = rhs.lifted(m);
    *this = CycScalar(m, reduce(field_data(m), poly_mul(a.coeffs_, b.coeffs_)));
    if (coeffs_.size() != static_cast<std::size_t>(field_data(m).phi))
        coeffs_.resize(static_cast<std::size_t>(field_data(m).phi), mpq_class(0));
    return *this;
}

CycScalar CycScalar::inverse() const
{
    if (is_zero())
        throw Error("DivisionByZero", "inverse of zero");
    if (conductor_ == 1)
        return CycScalar(mpq_class(1) / coeffs_[0]);
    const FieldData& f = field_data(conductor_);
    // extended Euclid: find s with s*a = 1 mod Phi_m
    Poly modulus(f.cyclotomic.begin(), f.cyclotomic.end());
    Poly a = coeffs_;
    trim(a);
    Poly r0 = modulus, r1 = a;
    Poly s0{}, s1{mpq_class(1)};
    while (!r1.empty()) {
        Poly q, r;
        poly_divmod(r0, r1, q, r);
        Poly s2 = poly_sub(s0, poly_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 is a nonzero constant since Phi_m is irreducible
    mpq_class c = r0[0];
    for (auto& x : s0)
        x /= c;
    return CycScalar(conductor_, reduce(f, s0));
}

CycScalar& CycScalar::operator/=(const CycScalar& rhs)
{
    return *this *= rhs.inverse();
}

CycScalar CycScalar::pow(long exponent) const
{
    if (exponent < 0)
        return inverse().pow(-exponent);
    CycScalar result(1);
    CycScalar base = *this;
    while (exponent > 0) {
        if (exponent & 1)
            result *= base;
        exponent >>= 1;
        if (exponent > 0)
            base *= base;
    }
    return result;
}

bool operator==(const CycScalar& a, const CycScalar& b)
{
    if (a.conductor_ == b.conductor_)
        return a.coeffs_ == b.coeffs_;
    const int m = static_cast<int>(lcm_int(a.conductor_, b.conductor_));
    return a.lifted(m).coeffs_ == b.lifted(m).coeffs_;
}

std::string CycScalar::render() const
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const mpq_class& c = coeffs_[i];
        if (c == 0)
            continue;
        mpq_class mag = abs(c);
        if (first) {
            if (c < 0)
                os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << render_rational(mag);
        } else {
            if (mag != 1)
                os << render_rational(mag) << "*";
            os << "z(" << conductor_ << ")^" << i;
        }
    }
    if (first)
        return "0";
    return os.str();
}

CycScalar root_of_unity(int m, long k)
{
    if (m < 1)
        throw Error("InvalidConductor", "root_of_unity needs m >= 1");
    long kk = ((k % m) + m) % m;
    long g = std::gcd(kk, static_cast<long>(m));
    if (kk == 0)
        return CycScalar(1);
    int order = static_cast<int>(m / g);
    long e = kk / g;
    if (order == 2)
        return CycScalar(-1);
    const FieldData& f = field_data(order);
    return CycScalar::from_power_basis(order, f.powers[static_cast<std::size_t>(e)]);
}

std::optional<long> multiplicative_order(const CycScalar& a)
{
    if (a.is_zero())
        throw Error("ZeroInput", "multiplicative order of zero");
    // roots of unity in Q(zeta_m) have order dividing lcm(2, m)
    const long bound = lcm_int(2, a.conductor());
    if (!a.pow(bound).is_one())
        return std::nullopt;
    for (long d = 1; d <= bound; ++d)
        if (bound % d == 0 && a.pow(d).is_one())
            return d;
    return bound;
}

long RootOfUnity::multiplicative_order() const
{
    long g = std::gcd(((exponent % order) + order) % order, static_cast<long>(order));
    return order / g;
}

bool operator==(const RootOfUnity& a, const RootOfUnity& b)
{
    return a.value() == b.value();
}

std::optional<long> discrete_log(const CycScalar& a, int m)
{
    for (long k = 0; k < m; ++k)
        if (root_of_unity(m, k) == a)
            return k;
    return std::nullopt;
}

CycScalar parse_scalar(std::string_view text)
{
    NCPoly p = parse_expression(text, "");
    if (p.empty())
        return CycScalar(0);
    return p.begin()->second;
}

} // namespace nichols
