#pragma once

#include <memory>
#include <variant>
#include <vector>

#include "crossbi/tensor.hpp"

namespace crossbi {

// A chain of leg operations applied to sparse tensors: "apply f on legs
// [first, ...)" and "permute legs". Lets a Sweedler formula be evaluated one
// basis element at a time without materializing large Kronecker products.
class Flow {
  public:
    Flow() = default;

    // Appends (id (x) f (x) id) with f acting at leg `first`.
    Flow &then(const LinMap &f, std::size_t first = 0);
    // Appends a leg permutation: new leg i is old leg perm[i].
    Flow &permute(std::vector<std::size_t> perm);
    // Appends every step of another flow.
    Flow &then(const Flow &other);

    Tensor operator()(Tensor t) const;
    // The flow as a matrix on the given domain, evaluated column by column.
    LinMap materialize(FieldSpec field, const Shape &domain) const;

  private:
    struct Apply {
        std::shared_ptr<const LinMap> map;
        std::shared_ptr<const SparseColumns> sparse;
        std::size_t first;
    };
    struct Permute {
        std::vector<std::size_t> perm;
    };
    std::vector<std::variant<Apply, Permute>> steps_;
};

} // namespace crossbi
