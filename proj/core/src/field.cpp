#include "prmlcc/field.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace prmlcc {
namespace {

constexpr unsigned kMaxExtensionDegree = 16;  // 2^16 is the largest q anyway

bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Digit vectors below are base-p polynomial coefficients, low order first.
using Digits = std::array<unsigned, 2 * kMaxExtensionDegree + 1>;

unsigned poly_degree(const Digits& a, unsigned upper) {
    for (unsigned i = upper + 1; i-- > 0;)
        if (a[i] != 0) return i;
    return 0;
}

// Remainder of a (degree <= da) modulo the monic divisor b (degree db > 0).
void poly_mod(Digits& a, unsigned da, const Digits& b, unsigned db, unsigned p) {
    for (unsigned i = da + 1; i-- > db;) {
        unsigned lead = a[i];
        if (lead == 0) continue;
        a[i] = 0;
        for (unsigned j = 0; j < db; ++j) {
            unsigned sub = (lead * b[j]) % p;
            a[i - db + j] = (a[i - db + j] + p - sub) % p;
        }
    }
}

bool is_zero_up_to(const Digits& a, unsigned upper) {
    for (unsigned i = 0; i <= upper; ++i)
        if (a[i] != 0) return false;
    return true;
}

// Irreducibility over GF(p) by trial division against every monic
// polynomial of degree 1..k/2. Fine for the k <= 16 in scope.
bool is_irreducible(const Digits& mod, unsigned k, unsigned p) {
    for (unsigned e = 1; 2 * e <= k; ++e) {
        std::uint64_t count = 1;
        for (unsigned i = 0; i < e; ++i) count *= p;
        for (std::uint64_t t = 0; t < count; ++t) {
            Digits div{};
            std::uint64_t rest = t;
            for (unsigned i = 0; i < e; ++i) {
                div[i] = static_cast<unsigned>(rest % p);
                rest /= p;
            }
            div[e] = 1;
            Digits rem = mod;
            poly_mod(rem, k, div, e, p);
            if (is_zero_up_to(rem, k)) return false;
        }
    }
    return true;
}

}  // namespace

Field::Field(unsigned p, unsigned k) : p_(p), k_(k) {
    if (!is_prime(p)) throw std::invalid_argument("field: p = " + std::to_string(p) + " is not prime");
    if (k < 1 || k > kMaxExtensionDegree) throw std::invalid_argument("field: extension degree out of range");

    std::uint64_t q = 1;
    for (unsigned i = 0; i < k; ++i) {
        q *= p;
        if (q > kFieldSizeLimit) throw std::invalid_argument("field: p^k exceeds 2^16");
    }
    q_ = static_cast<unsigned>(q);

    if (k == 1) {
        modulus_ = {0, 1};  // X, placeholder
    } else {
        // Smallest monic irreducible of degree k, ordering candidates by
        // their digit vector read as a base-p integer.
        std::uint64_t count = 1;
        for (unsigned i = 0; i < k; ++i) count *= p;
        bool found = false;
        for (std::uint64_t t = 0; t < count && !found; ++t) {
            Digits cand{};
            std::uint64_t rest = t;
            for (unsigned i = 0; i < k; ++i) {
                cand[i] = static_cast<unsigned>(rest % p);
                rest /= p;
            }
            cand[k] = 1;
            if (is_irreducible(cand, k, p)) {
                modulus_.assign(k + 1, 0);
                for (unsigned i = 0; i <= k; ++i) modulus_[i] = static_cast<Elem>(cand[i]);
                found = true;
            }
        }
        if (!found) throw std::logic_error("field: no irreducible modulus found");  // cannot happen
    }

    if (q_ <= kTableLimit) {
        auto tables = std::make_shared<Tables>();
        tables->mul.assign(static_cast<std::size_t>(q_) * q_, 0);
        tables->inv.assign(q_, 0);
        for (unsigned a = 0; a < q_; ++a)
            for (unsigned b = 0; b <= a; ++b) {
                Elem r = mul_nocache(static_cast<Elem>(a), static_cast<Elem>(b));
                tables->mul[a * q_ + b] = r;
                tables->mul[b * q_ + a] = r;
                if (r == 1) {
                    tables->inv[a] = static_cast<Elem>(b);
                    tables->inv[b] = static_cast<Elem>(a);
                }
            }
        tables_ = std::move(tables);
    }
}

Elem Field::add(Elem a, Elem b) const {
    if (k_ == 1) return static_cast<Elem>((static_cast<unsigned>(a) + b) % p_);
    // digitwise mod p
    unsigned r = 0, w = 1;
    for (unsigned i = 0; i < k_; ++i) {
        unsigned da = a % p_, db = b % p_;
        a = static_cast<Elem>(a / p_);
        b = static_cast<Elem>(b / p_);
        r += ((da + db) % p_) * w;
        w *= p_;
    }
    return static_cast<Elem>(r);
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::neg(Elem a) const {
    if (k_ == 1) return static_cast<Elem>((p_ - a) % p_);
    unsigned r = 0, w = 1;
    for (unsigned i = 0; i < k_; ++i) {
        unsigned da = a % p_;
        a = static_cast<Elem>(a / p_);
        r += ((p_ - da) % p_) * w;
        w *= p_;
    }
    return static_cast<Elem>(r);
}

Elem Field::mul_nocache(Elem a, Elem b) const {
    if (k_ == 1) return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % p_);

    Digits da{}, db{};
    unsigned ta = a, tb = b;
    for (unsigned i = 0; i < k_; ++i) {
        da[i] = ta % p_;
        ta /= p_;
        db[i] = tb % p_;
        tb /= p_;
    }
    Digits prod{};
    for (unsigned i = 0; i < k_; ++i) {
        if (da[i] == 0) continue;
        for (unsigned j = 0; j < k_; ++j)
            prod[i + j] = static_cast<unsigned>((prod[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % p_);
    }
    Digits mod{};
    for (unsigned i = 0; i <= k_; ++i) mod[i] = modulus_[i];
    poly_mod(prod, 2 * k_ - 2, mod, k_, p_);

    unsigned r = 0, w = 1;
    for (unsigned i = 0; i < k_; ++i) {
        r += prod[i] * w;
        w *= p_;
    }
    return static_cast<Elem>(r);
}

Elem Field::mul(Elem a, Elem b) const {
    if (tables_) return tables_->mul[static_cast<std::size_t>(a) * q_ + b];
    return mul_nocache(a, b);
}

Elem Field::inv(Elem a) const {
    if (a == 0) throw std::domain_error("field: inverse of zero");
    if (tables_) return tables_->inv[a];
    return pow(a, q_ - 2);  // Fermat: a^(q-2) = a^{-1}
}

Elem Field::pow(Elem a, std::uint64_t e) const {
    Elem r = 1;
    Elem base = a;
    while (e > 0) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

std::vector<Elem> Field::elements() const {
    std::vector<Elem> out(q_);
    for (unsigned i = 0; i < q_; ++i) out[i] = static_cast<Elem>(i);
    return out;
}

}  // namespace prmlcc
