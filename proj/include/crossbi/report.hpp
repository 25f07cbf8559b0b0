#pragma once

#include <functional>
#include <string>
#include <vector>

#include "crossbi/flow.hpp"
#include "crossbi/tensor.hpp"

namespace crossbi {

struct Violation {
    // Leg indices of the basis element (or tuple) where the identity failed.
    std::vector<std::size_t> indices;
    Tensor lhs;
    Tensor rhs;
    std::string detail;
};

struct IdentityResult {
    std::string name;
    std::size_t checked = 0;
    std::size_t failed = 0;
    // First few violations only.
    std::vector<Violation> examples;

    bool ok() const { return failed == 0; }
};

// Ordered list of identities with their verdicts. Order is insertion order,
// so reports are deterministic for deterministic callers.
class CheckReport {
  public:
    static constexpr std::size_t max_examples = 4;

    const std::vector<IdentityResult> &results() const { return results_; }
    bool ok() const;
    bool has(const std::string &name) const;
    // True when present and without failures.
    bool passed(const std::string &name) const;
    const IdentityResult *find(const std::string &name) const;
    std::vector<std::string> failed_names() const;

    // Registers the identity (so it appears even if no case is recorded).
    IdentityResult &entry(const std::string &name);
    // One case comparing two tensors.
    void record(const std::string &name, std::vector<std::size_t> indices, const Tensor &lhs, const Tensor &rhs);
    // One boolean case.
    void record(const std::string &name, bool ok, const std::string &detail = {});
    // Appends every entry of other, names prefixed; same names are combined.
    void merge(const CheckReport &other, const std::string &prefix = {});

    std::string to_text(bool verbose = false) const;

  private:
    std::vector<IdentityResult> results_;
};

using TensorFn = std::function<Tensor(const Tensor &)>;

// Checks lhs(e) == rhs(e) on every basis element e of `domain`. Cases are
// evaluated in parallel and recorded in index order.
void check_identity(CheckReport &report, const std::string &name, FieldSpec field, const Shape &domain,
                    const TensorFn &lhs, const TensorFn &rhs);
void check_identity(CheckReport &report, const std::string &name, FieldSpec field, const Shape &domain,
                    const Flow &lhs, const Flow &rhs);
// Column-by-column comparison of two maps with equal shapes.
void compare_maps(CheckReport &report, const std::string &name, const LinMap &lhs, const LinMap &rhs);

} // namespace crossbi
