#include "sharpmilnor/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace sharpmilnor {

bool LaurentPoly::is_associate_of(const LaurentPoly& other) const {
    if (is_zero() || other.is_zero()) return is_zero() && other.is_zero();
    auto q = divided_by(other);
    return q && q->is_unit();
}

std::optional<LaurentPoly> LaurentPoly::divided_by(const LaurentPoly& divisor) const {
    if (divisor.is_zero()) return std::nullopt;
    if (is_zero()) return LaurentPoly::zero();
    // Shift both to ordinary polynomials and divide; the exponent offset is a unit.
    long long shift = min_exp() - divisor.min_exp();
    // Work with dense vectors indexed from each operand's min exponent.
    auto dense = [](const LaurentPoly& p) {
        std::vector<Rat> v(static_cast<size_t>(p.max_exp() - p.min_exp()) + 1, Rat(0));
        for (auto& [e, c] : p.coefficients()) v[static_cast<size_t>(e - p.min_exp())] = c;
        return v;
    };
    std::vector<Rat> num = dense(*this);
    std::vector<Rat> den = dense(divisor);
    if (num.size() < den.size()) return std::nullopt;
    std::vector<Rat> quot(num.size() - den.size() + 1, Rat(0));
    for (size_t k = quot.size(); k-- > 0;) {
        Rat q = num[k + den.size() - 1] / den.back();
        quot[k] = q;
        if (q != 0)
            for (size_t i = 0; i < den.size(); ++i) num[k + i] -= q * den[i];
    }
    for (const Rat& r : num)
        if (r != 0) return std::nullopt;
    LaurentPoly result;
    for (size_t i = 0; i < quot.size(); ++i)
        if (quot[i] != 0) result.coeffs_[static_cast<long long>(i) + shift] = quot[i];
    return result;
}

LaurentPoly div_exact(const LaurentPoly& p, const LaurentPoly& q) {
    auto r = p.divided_by(q);
    if (!r) throw std::domain_error("not divisible");
    return *r;
}

std::string LaurentPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto& [e, c] : coeffs_) {
        Rat a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool unit_coeff = (a == 1) && e != 0;
        if (!unit_coeff) out << rat_to_string(a);
        if (e != 0) {
            if (!unit_coeff) out << "*";
            out << "t";
            if (e != 1) out << "^" << e;
        }
    }
    return out.str();
}

std::optional<LaurentPoly> LaurentPoly::parse(const std::string& text) {
    LaurentPoly result;
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i >= text.size()) return std::nullopt;
    bool first = true;
    while (i < text.size()) {
        skip_ws();
        int sgn = 1;
        if (text[i] == '+' || text[i] == '-') {
            sgn = text[i] == '-' ? -1 : 1;
            ++i;
            skip_ws();
        } else if (!first) {
            return std::nullopt;
        }
        // coefficient (optional when a t-term follows)
        std::string num;
        while (i < text.size() &&
               (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/'))
            num += text[i++];
        skip_ws();
        bool has_t = i < text.size() && (text[i] == 't' || text[i] == '*');
        Rat coeff(1);
        if (!num.empty()) {
            auto r = parse_rat(num);
            if (!r) return std::nullopt;
            coeff = *r;
        } else if (!has_t) {
            return std::nullopt;
        }
        long long exp = 0;
        if (has_t) {
            if (text[i] == '*') {
                ++i;
                skip_ws();
                if (i >= text.size() || text[i] != 't') return std::nullopt;
            }
            ++i;  // consume 't'
            exp = 1;
            skip_ws();
            if (i < text.size() && text[i] == '^') {
                ++i;
                skip_ws();
                std::string es;
                if (i < text.size() && (text[i] == '-' || text[i] == '+')) es += text[i++];
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                    es += text[i++];
                if (es.empty() || es == "-" || es == "+") return std::nullopt;
                exp = std::stoll(es);
            }
        }
        result += LaurentPoly::term(sgn * coeff, exp);
        first = false;
        skip_ws();
    }
    return result;
}

long long euler_phi(long long d) {
    long long result = d;
    for (long long p = 2; p * p <= d; ++p) {
        if (d % p == 0) {
            result -= result / p;
            while (d % p == 0) d /= p;
        }
    }
    if (d > 1) result -= result / d;
    return result;
}

LaurentPoly cyclotomic(long long d) {
    static std::map<long long, LaurentPoly> cache;
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    LaurentPoly result = LaurentPoly::t_power(d) - LaurentPoly::one();
    for (long long e = 1; e < d; ++e)
        if (d % e == 0) result = div_exact(result, cyclotomic(e));
    cache[d] = result;
    return result;
}

namespace {

std::vector<Rat> phi_dense(long long d) {
    LaurentPoly phi = cyclotomic(d);
    std::vector<Rat> v(static_cast<size_t>(phi.max_exp()) + 1, Rat(0));
    for (auto& [e, c] : phi.coefficients()) v[static_cast<size_t>(e)] = c;
    return v;
}

// Reduce a dense polynomial mod Phi_d in place, returning degree < phi(d) part.
std::vector<Rat> mod_phi(std::vector<Rat> v, long long d) {
    std::vector<Rat> phi = phi_dense(d);
    size_t deg = phi.size() - 1;  // monic of degree phi(d)
    while (v.size() > deg) {
        Rat lead = v.back();
        size_t k = v.size() - 1 - deg;
        if (lead != 0)
            for (size_t i = 0; i < phi.size(); ++i) v[k + i] -= lead * phi[i];
        v.pop_back();
    }
    v.resize(deg, Rat(0));
    return v;
}

std::vector<Rat> poly_mul_mod(const std::vector<Rat>& a, const std::vector<Rat>& b,
                              long long d) {
    std::vector<Rat> prod(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) prod[i + j] += a[i] * b[j];
    }
    return mod_phi(std::move(prod), d);
}

bool all_zero(const std::vector<Rat>& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& r) { return r == 0; });
}

}  // namespace

CycloElem CycloElem::zero(long long d) {
    return CycloElem(d, std::vector<Rat>(static_cast<size_t>(euler_phi(d)), Rat(0)));
}

CycloElem CycloElem::one(long long d) {
    auto v = std::vector<Rat>(static_cast<size_t>(euler_phi(d)), Rat(0));
    v[0] = 1;
    return CycloElem(d, v);
}

bool CycloElem::is_zero() const { return all_zero(rep_); }

CycloElem CycloElem::operator+(const CycloElem& o) const {
    std::vector<Rat> v = rep_;
    for (size_t i = 0; i < v.size(); ++i) v[i] += o.rep_[i];
    return CycloElem(d_, v);
}

CycloElem CycloElem::operator-(const CycloElem& o) const {
    std::vector<Rat> v = rep_;
    for (size_t i = 0; i < v.size(); ++i) v[i] -= o.rep_[i];
    return CycloElem(d_, v);
}

CycloElem CycloElem::operator*(const CycloElem& o) const {
    if (is_zero() || o.is_zero()) return zero(d_);
    return CycloElem(d_, poly_mul_mod(rep_, o.rep_, d_));
}

bool CycloElem::operator==(const CycloElem& o) const { return d_ == o.d_ && rep_ == o.rep_; }

CycloElem CycloElem::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    // Extended Euclid on (rep, Phi_d) over Q[t].
    auto degree = [](const std::vector<Rat>& v) {
        for (size_t i = v.size(); i-- > 0;)
            if (v[i] != 0) return static_cast<long long>(i);
        return -1LL;
    };
    std::vector<Rat> r0 = phi_dense(d_), r1 = rep_;
    while (degree(r1) >= 0 && r1.size() > static_cast<size_t>(degree(r1)) + 1)
        r1.pop_back();
    std::vector<Rat> s0{Rat(0)}, s1{Rat(1)};  // coefficients applied to rep_
    while (true) {
        long long d1 = degree(r1);
        if (d1 < 0) throw std::domain_error("not invertible");
        if (d1 == 0) break;
        // r0 = q*r1 + r2
        std::vector<Rat> q(static_cast<size_t>(degree(r0) - d1) + 1, Rat(0));
        std::vector<Rat> rem = r0;
        for (size_t k = q.size(); k-- > 0;) {
            long long dr = degree(rem);
            if (dr < d1) break;
            if (dr - d1 != static_cast<long long>(k)) continue;
            Rat f = rem[static_cast<size_t>(dr)] / r1[static_cast<size_t>(d1)];
            q[k] = f;
            for (long long i = 0; i <= d1; ++i)
                rem[static_cast<size_t>(k + i)] -= f * r1[static_cast<size_t>(i)];
        }
        // s2 = s0 - q*s1
        std::vector<Rat> qs(q.size() + s1.size() - 1, Rat(0));
        for (size_t i = 0; i < q.size(); ++i)
            for (size_t j = 0; j < s1.size(); ++j) qs[i + j] += q[i] * s1[j];
        std::vector<Rat> s2(std::max(s0.size(), qs.size()), Rat(0));
        for (size_t i = 0; i < s0.size(); ++i) s2[i] += s0[i];
        for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
        r0 = r1;
        r1 = rem;
        while (!r1.empty() && r1.back() == 0) r1.pop_back();
        s0 = s1;
        s1 = s2;
    }
    // r1 is a nonzero constant c: inverse = s1 / c  (mod Phi_d)
    Rat c = r1[0];
    for (Rat& x : s1) x /= c;
    return CycloElem(d_, mod_phi(std::move(s1), d_));
}

CycloElem reduce_mod(const LaurentPoly& p, long long d) {
    if (d < 2) throw std::domain_error("reduce_mod requires d >= 2");
    CycloElem t = CycloElem(d, mod_phi({Rat(0), Rat(1)}, d));
    CycloElem result = CycloElem::zero(d);
    if (p.is_zero()) return result;
    CycloElem tinv = t.inverse();
    for (auto& [e, c] : p.coefficients()) {
        CycloElem term = CycloElem::one(d);
        CycloElem base = e >= 0 ? t : tinv;
        for (long long k = 0; k < (e >= 0 ? e : -e); ++k) term = term * base;
        std::vector<Rat> scaled = term.rep();
        for (Rat& x : scaled) x *= c;
        result = result + CycloElem(d, scaled);
    }
    return result;
}

}  // namespace sharpmilnor
