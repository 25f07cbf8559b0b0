#include "crossbi/flow.hpp"

#include "crossbi/kernels.hpp"

namespace crossbi {

Flow &Flow::then(const LinMap &f, std::size_t first) {
    auto m = std::make_shared<const LinMap>(f);
    auto s = std::make_shared<const SparseColumns>(*m);
    steps_.emplace_back(Apply{std::move(m), std::move(s), first});
    return *this;
}

Flow &Flow::permute(std::vector<std::size_t> perm) {
    steps_.emplace_back(Permute{std::move(perm)});
    return *this;
}

Flow &Flow::then(const Flow &other) {
    steps_.insert(steps_.end(), other.steps_.begin(), other.steps_.end());
    return *this;
}

Tensor Flow::operator()(Tensor t) const {
    for (const auto &step : steps_) {
        if (const auto *a = std::get_if<Apply>(&step))
            t = t.apply(*a->sparse, a->first);
        else
            t = t.permute(std::get<Permute>(step).perm);
    }
    return t;
}

LinMap Flow::materialize(FieldSpec field, const Shape &domain) const {
    const std::size_t n = domain.total();
    std::vector<Tensor> cols(n);
    kernels::for_each_index(n, [&](std::size_t j) { cols[j] = (*this)(Tensor::basis(field, domain, j)); });
    Shape cod = n ? cols[0].shape() : (*this)(Tensor(field, domain)).shape();
    LinMap out(field, domain, cod);
    for (std::size_t j = 0; j < n; ++j)
        for (const auto &[r, v] : cols[j].terms())
            out.at(r, j) = v;
    return out;
}

} // namespace crossbi
