#include "prmlcc/projective.hpp"

#include <stdexcept>

namespace prmlcc {

Normalized normalize(const Field& f, std::span<const Elem> raw) {
    std::size_t lead = raw.size();
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (raw[i] != 0) {
            lead = i;
            break;
        }
    }
    if (lead == raw.size()) throw std::invalid_argument("normalize: zero vector");

    Elem d = raw[lead];
    ProjPoint p;
    p.coords.assign(raw.begin(), raw.end());
    if (d != 1) {
        Elem s = f.inv(d);
        for (std::size_t i = lead; i < raw.size(); ++i) p.coords[i] = f.mul(raw[i], s);
    }
    return {std::move(p), d};
}

bool is_normalized(std::span<const Elem> coords) {
    for (Elem c : coords) {
        if (c == 0) continue;
        return c == 1;
    }
    return false;  // zero vector
}

std::size_t projective_size(const Field& f, unsigned m, std::size_t cap) {
    // sum of the stratum sizes q^m + q^{m-1} + ... + 1
    std::size_t total = 0, stratum = 1;
    for (unsigned i = 0; i <= m; ++i) {
        if (stratum > cap || total > cap - stratum)
            throw std::invalid_argument("projective_size: exceeds enumeration cap");
        total += stratum;
        if (i < m && stratum > cap / f.q())
            throw std::invalid_argument("projective_size: exceeds enumeration cap");
        stratum *= f.q();
    }
    return total;
}

std::vector<ProjPoint> enumerate_points(const Field& f, unsigned m, std::size_t cap) {
    const std::size_t n = projective_size(f, m, cap);
    const unsigned q = f.q();

    std::vector<ProjPoint> out;
    out.reserve(n);
    for (unsigned lead = 0; lead <= m; ++lead) {
        const unsigned free = m - lead;
        std::vector<Elem> coords(m + 1, 0);
        coords[lead] = 1;
        // odometer over the free trailing coordinates, leftmost most significant
        for (;;) {
            out.push_back(ProjPoint{coords});
            unsigned pos = free;
            while (pos > 0) {
                Elem& digit = coords[lead + pos];
                if (++digit < q) break;
                digit = 0;
                --pos;
            }
            if (pos == 0) break;
        }
    }
    return out;
}

std::size_t point_index(const Field& f, const ProjPoint& p) {
    if (!is_normalized(p.coords)) throw std::invalid_argument("point_index: not a normalized point");
    const unsigned m = p.dim();
    const std::size_t q = f.q();

    unsigned lead = 0;
    while (p.coords[lead] == 0) ++lead;

    // strata before this one have sizes q^m, q^{m-1}, ...
    std::size_t offset = 0, stratum_size = 1;
    for (unsigned i = 0; i < m; ++i) stratum_size *= q;
    for (unsigned i = 0; i < lead; ++i) {
        offset += stratum_size;
        stratum_size /= q;
    }

    std::size_t value = 0;
    for (unsigned t = lead + 1; t <= m; ++t) value = value * q + p.coords[t];
    return offset + value;
}

ProjPoint point_at(const Field& f, unsigned m, std::size_t index) {
    const std::size_t q = f.q();
    std::size_t stratum_size = 1;
    for (unsigned i = 0; i < m; ++i) stratum_size *= q;  // q^m

    unsigned lead = 0;
    while (index >= stratum_size) {
        index -= stratum_size;
        stratum_size /= q;
        ++lead;
        if (lead > m) throw std::out_of_range("point_at: index out of range");
    }

    ProjPoint p;
    p.coords.assign(m + 1, 0);
    p.coords[lead] = 1;
    for (unsigned t = m; t > lead; --t) {
        p.coords[t] = static_cast<Elem>(index % q);
        index /= q;
    }
    return p;
}

Line line_through(const Field& f, const ProjPoint& w, const ProjPoint& v) {
    if (w.coords.size() != v.coords.size())
        throw std::invalid_argument("line_through: dimension mismatch");
    if (!is_normalized(w.coords) || !is_normalized(v.coords))
        throw std::invalid_argument("line_through: points must be normalized");
    if (w == v) throw std::invalid_argument("line_through: w == v");

    const std::size_t len = w.coords.size();
    Line line;
    line.params.reserve(f.q() + 1);
    line.points.reserve(f.q() + 1);
    line.scalars.reserve(f.q() + 1);

    std::vector<Elem> raw(len);
    for (Elem lambda : f.elements()) {
        for (std::size_t i = 0; i < len; ++i) raw[i] = f.add(w.coords[i], f.mul(lambda, v.coords[i]));
        Normalized nz = normalize(f, raw);
        line.params.push_back(ExtElem::finite(lambda));
        line.points.push_back(std::move(nz.point));
        line.scalars.push_back(nz.scale);
    }
    line.params.push_back(ExtElem::infinity());
    line.points.push_back(v);
    line.scalars.push_back(1);
    return line;
}

std::size_t affine_size(const Field& f, unsigned m, std::size_t cap) {
    std::size_t n = 1;
    for (unsigned i = 0; i < m; ++i) {
        if (n > cap / f.q()) throw std::invalid_argument("affine_size: exceeds enumeration cap");
        n *= f.q();
    }
    if (n > cap) throw std::invalid_argument("affine_size: exceeds enumeration cap");
    return n;
}

std::vector<Elem> affine_at(const Field& f, unsigned m, std::size_t index) {
    const std::size_t q = f.q();
    std::vector<Elem> coords(m, 0);
    for (unsigned t = m; t-- > 0;) {
        coords[t] = static_cast<Elem>(index % q);
        index /= q;
    }
    if (index != 0) throw std::out_of_range("affine_at: index out of range");
    return coords;
}

std::size_t affine_index(const Field& f, std::span<const Elem> coords) {
    std::size_t idx = 0;
    for (Elem c : coords) idx = idx * f.q() + c;
    return idx;
}

}  // namespace prmlcc
