#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace prmlcc {

/// Field element, encoded as an integer in [0, q). For an extension field
/// GF(p^k) the value is read base p, low digit first: the digits are the
/// coefficients of the residue polynomial, so element 0 is the zero
/// polynomial and element 1 is the constant 1.
using Elem = std::uint16_t;

/// Element of F_q extended with a distinguished point at infinity. Serves
/// both as an extended Reed-Solomon evaluation point and as a line
/// parameter; infinity is a tag, never a field value.
struct ExtElem {
    Elem value = 0;
    bool inf = false;

    static constexpr ExtElem infinity() { return {0, true}; }
    static constexpr ExtElem finite(Elem v) { return {v, false}; }
    constexpr bool is_inf() const { return inf; }

    friend constexpr bool operator==(const ExtElem&, const ExtElem&) = default;
};

/// Exact arithmetic in GF(p^k), q = p^k <= 2^16.
///
/// The modulus is chosen deterministically: the monic irreducible degree-k
/// polynomial whose digit vector, read as a base-p integer (low digit
/// first), is smallest. Two Field objects built from the same (p, k) are
/// therefore interchangeable. For q <= 256 multiplication and inversion are
/// table backed; tables are shared, so copies are cheap.
///
/// Immutable after construction; all operations are pure and safe to call
/// concurrently.
class Field {
public:
    /// Builds GF(p^k). Throws std::invalid_argument if p is not prime,
    /// k < 1, or p^k > 2^16.
    explicit Field(unsigned p, unsigned k = 1);

    /// GF(2), the smallest field.
    Field() : Field(2, 1) {}

    unsigned p() const { return p_; }
    unsigned k() const { return k_; }
    unsigned q() const { return q_; }

    /// Modulus digits, low order first, length k+1, monic. For k = 1 this
    /// is X (digits {0, 1}), unused by the arithmetic.
    const std::vector<Elem>& modulus() const { return modulus_; }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;

    /// Multiplicative inverse. Throws std::domain_error on a == 0.
    Elem inv(Elem a) const;

    /// a^e with the convention 0^0 == 1.
    Elem pow(Elem a, std::uint64_t e) const;

    /// The q elements in canonical (ascending value) order: 0, 1, ...
    /// Every enumeration in the library derives its order from this one.
    std::vector<Elem> elements() const;

    bool operator==(const Field& other) const {
        return p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_;
    }

private:
    Elem mul_nocache(Elem a, Elem b) const;

    unsigned p_ = 0;
    unsigned k_ = 0;
    unsigned q_ = 0;
    std::vector<Elem> modulus_;

    struct Tables {
        std::vector<Elem> mul;  // q*q, row major
        std::vector<Elem> inv;  // q entries, inv[0] unused
    };
    std::shared_ptr<const Tables> tables_;  // only for q <= kTableLimit
};

/// Largest field that gets multiplication/inversion tables.
inline constexpr unsigned kTableLimit = 256;

/// Largest supported field size.
inline constexpr std::uint32_t kFieldSizeLimit = 1u << 16;

}  // namespace prmlcc
