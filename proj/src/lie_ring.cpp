#include "idlab/lie_ring.hpp"

#include <stdexcept>
#include <string>

namespace idlab {

void validate(const RingContext& ctx, const BasisElement& e) {
    if (e.direction < 1 || e.direction > ctx.n)
        throw std::invalid_argument("basis element direction " +
                                    std::to_string(e.direction) +
                                    " out of range 1.." + std::to_string(ctx.n));
    if (e.partition.max_part() > e.direction - 1)
        throw std::invalid_argument(
            "basis element has part " + std::to_string(e.partition.max_part()) +
            " exceeding direction bound " + std::to_string(e.direction - 1));
}

RingElement RingElement::from(const BasisElement& e, i64 coeff) {
    RingElement x;
    x.add_term(e, coeff);
    return x;
}

void RingElement::add_term(const BasisElement& e, i64 coeff) {
    if (coeff == 0)
        return;
    auto [it, inserted] = terms_.emplace(e, coeff);
    if (!inserted) {
        it->second = checked_add(it->second, coeff);
        if (it->second == 0)
            terms_.erase(it);
    }
}

void RingElement::add(const RingElement& other) {
    for (const auto& [e, c] : other.terms_)
        add_term(e, c);
}

RingElement RingElement::negated() const {
    RingElement out;
    for (const auto& [e, c] : terms_)
        out.terms_.emplace(e, checked_mul(c, -1));
    return out;
}

RingElement RingElement::scaled(i64 factor) const {
    RingElement out;
    if (factor == 0)
        return out;
    for (const auto& [e, c] : terms_)
        out.terms_.emplace(e, checked_mul(c, factor));
    return out;
}

i64 RingElement::coeff_of(const BasisElement& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
}

std::vector<BasisElement> basis_enumerate(const RingContext& ctx, i64 max_weight) {
    std::vector<BasisElement> out;
    for (int k = 1; k <= ctx.n; ++k)
        for (Partition& p : enumerate_partitions(k - 1, max_weight))
            out.push_back(BasisElement{std::move(p), k});
    return out;
}

std::optional<std::pair<i64, BasisElement>>
bracket_basis(const RingContext& ctx, const BasisElement& left, const BasisElement& right) {
    validate(ctx, left);
    validate(ctx, right);
    const int k = left.direction;
    const int j = right.direction;
    if (j == k)
        return std::nullopt;
    if (j < k) {
        i64 lj = left.partition.mult_of(j);
        if (lj == 0)
            return std::nullopt;
        BasisElement res{left.partition, k};
        res.partition.add(j, -1);
        for (const auto& e : right.partition.entries())
            res.partition.add(e.part, e.mult);
        return std::make_pair(lj, std::move(res));
    }
    i64 tk = right.partition.mult_of(k);
    if (tk == 0)
        return std::nullopt;
    BasisElement res{right.partition, j};
    res.partition.add(k, -1);
    for (const auto& e : left.partition.entries())
        res.partition.add(e.part, e.mult);
    return std::make_pair(checked_mul(tk, -1), std::move(res));
}

RingElement bracket(const RingContext& ctx, const RingElement& x, const RingElement& y) {
    RingElement out;
    for (const auto& [ex, cx] : x.terms())
        for (const auto& [ey, cy] : y.terms())
            if (auto r = bracket_basis(ctx, ex, ey))
                out.add_term(r->second, checked_mul(checked_mul(cx, cy), r->first));
    return out;
}

bool in_span(const RingElement& x, const std::set<BasisElement>& h) {
    for (const auto& [e, c] : x.terms())
        if (!h.count(e))
            return false;
    return true;
}

} // namespace idlab
