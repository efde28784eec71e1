#pragma once

#include "sharpmilnor/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sharpmilnor {

// Univariate Laurent polynomial with exact rational coefficients.
// Canonical form: no zero coefficients stored.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(const Rat& constant) {
        if (constant != 0) coeffs_[0] = constant;
    }

    static LaurentPoly term(const Rat& coeff, long long exponent) {
        LaurentPoly p;
        if (coeff != 0) p.coeffs_[exponent] = coeff;
        return p;
    }
    static LaurentPoly t_power(long long exponent) { return term(Rat(1), exponent); }
    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return LaurentPoly(Rat(1)); }

    bool is_zero() const { return coeffs_.empty(); }
    const std::map<long long, Rat>& coefficients() const { return coeffs_; }

    Rat coeff(long long exponent) const {
        auto it = coeffs_.find(exponent);
        return it == coeffs_.end() ? Rat(0) : it->second;
    }
    long long min_exp() const { return coeffs_.begin()->first; }
    long long max_exp() const { return coeffs_.rbegin()->first; }

    LaurentPoly operator-() const {
        LaurentPoly r;
        for (auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
        return r;
    }

    LaurentPoly& operator+=(const LaurentPoly& other) {
        for (auto& [e, c] : other.coeffs_) {
            Rat& slot = coeffs_[e];
            slot += c;
            if (slot == 0) coeffs_.erase(e);
        }
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& other) { return *this += -other; }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (auto& [ea, ca] : a.coeffs_)
            for (auto& [eb, cb] : b.coeffs_) {
                Rat& slot = r.coeffs_[ea + eb];
                slot += ca * cb;
                if (slot == 0) r.coeffs_.erase(ea + eb);
            }
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& other) { return *this = *this * other; }

    bool operator==(const LaurentPoly& other) const { return coeffs_ == other.coeffs_; }
    bool operator!=(const LaurentPoly& other) const { return !(*this == other); }

    // True when this = c*t^k, c != 0 (a unit of the Laurent ring).
    bool is_unit() const { return coeffs_.size() == 1; }

    // True when this = unit * other.
    bool is_associate_of(const LaurentPoly& other) const;

    // Exact division in the Laurent ring; nullopt when not divisible.
    std::optional<LaurentPoly> divided_by(const LaurentPoly& divisor) const;

    std::string to_string() const;
    // Inverse of to_string; also accepts any "a*t^k" sum with +/- separators.
    static std::optional<LaurentPoly> parse(const std::string& text);

private:
    std::map<long long, Rat> coeffs_;
};

inline LaurentPoly one_minus_t() { return LaurentPoly::one() - LaurentPoly::t_power(1); }
inline LaurentPoly one_minus_t_pow(long long n) {
    return LaurentPoly::one() - LaurentPoly::t_power(n);
}

// Exact division p / q, throwing on failure ("not divisible").
LaurentPoly div_exact(const LaurentPoly& p, const LaurentPoly& q);

// The d-th cyclotomic polynomial as a Laurent polynomial with exponents >= 0.
LaurentPoly cyclotomic(long long d);

long long euler_phi(long long d);

// Element of Q[t]/(Phi_d): representative of degree < phi(d).
class CycloElem {
public:
    CycloElem(long long d, std::vector<Rat> rep) : d_(d), rep_(std::move(rep)) {}

    static CycloElem zero(long long d);
    static CycloElem one(long long d);

    long long order() const { return d_; }
    const std::vector<Rat>& rep() const { return rep_; }
    bool is_zero() const;

    CycloElem operator+(const CycloElem& o) const;
    CycloElem operator-(const CycloElem& o) const;
    CycloElem operator*(const CycloElem& o) const;
    CycloElem inverse() const;  // throws on zero
    bool operator==(const CycloElem& o) const;

private:
    long long d_;
    std::vector<Rat> rep_;  // coefficients, degree < phi(d)
};

// Ring homomorphism Q[t,t^-1] -> Q[t]/(Phi_d), t^-1 mapped to the inverse class.
CycloElem reduce_mod(const LaurentPoly& p, long long d);

}  // namespace sharpmilnor
