#include "crossbi/report.hpp"

#include <algorithm>
#include <sstream>

#include "crossbi/kernels.hpp"

namespace crossbi {

bool CheckReport::ok() const {
    return std::all_of(results_.begin(), results_.end(), [](const IdentityResult &r) { return r.ok(); });
}

const IdentityResult *CheckReport::find(const std::string &name) const {
    for (const auto &r : results_)
        if (r.name == name)
            return &r;
    return nullptr;
}

bool CheckReport::has(const std::string &name) const { return find(name) != nullptr; }

bool CheckReport::passed(const std::string &name) const {
    const auto *r = find(name);
    return r && r->ok();
}

std::vector<std::string> CheckReport::failed_names() const {
    std::vector<std::string> out;
    for (const auto &r : results_)
        if (!r.ok())
            out.push_back(r.name);
    return out;
}

IdentityResult &CheckReport::entry(const std::string &name) {
    for (auto &r : results_)
        if (r.name == name)
            return r;
    results_.push_back(IdentityResult{name, 0, 0, {}});
    return results_.back();
}

void CheckReport::record(const std::string &name, std::vector<std::size_t> indices, const Tensor &lhs,
                         const Tensor &rhs) {
    auto &e = entry(name);
    ++e.checked;
    if (lhs == rhs)
        return;
    ++e.failed;
    if (e.examples.size() < max_examples)
        e.examples.push_back(Violation{std::move(indices), lhs, rhs, {}});
}

void CheckReport::record(const std::string &name, bool ok, const std::string &detail) {
    auto &e = entry(name);
    ++e.checked;
    if (ok)
        return;
    ++e.failed;
    if (e.examples.size() < max_examples)
        e.examples.push_back(Violation{{}, {}, {}, detail});
}

void CheckReport::merge(const CheckReport &other, const std::string &prefix) {
    for (const auto &r : other.results_) {
        auto &e = entry(prefix + r.name);
        e.checked += r.checked;
        e.failed += r.failed;
        for (const auto &v : r.examples)
            if (e.examples.size() < max_examples)
                e.examples.push_back(v);
    }
}

std::string CheckReport::to_text(bool verbose) const {
    std::ostringstream os;
    for (const auto &r : results_) {
        os << (r.ok() ? "PASS " : "FAIL ") << r.name << "  (" << r.checked - r.failed << "/" << r.checked << ")\n";
        if (r.ok() && !verbose)
            continue;
        for (const auto &v : r.examples) {
            os << "    at (";
            for (std::size_t i = 0; i < v.indices.size(); ++i)
                os << (i ? "," : "") << v.indices[i];
            os << ")";
            if (!v.detail.empty())
                os << " " << v.detail;
            else
                os << " lhs = " << v.lhs.to_string() << "  rhs = " << v.rhs.to_string();
            os << "\n";
        }
    }
    return os.str();
}

void check_identity(CheckReport &report, const std::string &name, FieldSpec field, const Shape &domain,
                    const TensorFn &lhs, const TensorFn &rhs) {
    const std::size_t n = domain.total();
    std::vector<Tensor> l(n), r(n);
    kernels::for_each_index(n, [&](std::size_t i) {
        const Tensor e = Tensor::basis(field, domain, i);
        l[i] = lhs(e);
        r[i] = rhs(e);
    });
    report.entry(name);
    for (std::size_t i = 0; i < n; ++i)
        report.record(name, domain.legs(i), l[i], r[i]);
}

void check_identity(CheckReport &report, const std::string &name, FieldSpec field, const Shape &domain,
                    const Flow &lhs, const Flow &rhs) {
    check_identity(report, name, field, domain, TensorFn(lhs), TensorFn(rhs));
}

void compare_maps(CheckReport &report, const std::string &name, const LinMap &lhs, const LinMap &rhs) {
    if (!(lhs.domain() == rhs.domain()) || !(lhs.codomain() == rhs.codomain()))
        throw ShapeMismatch(name + ": compared maps have shapes " + lhs.domain().to_string() + "->" +
                            lhs.codomain().to_string() + " and " + rhs.domain().to_string() + "->" +
                            rhs.codomain().to_string());
    report.entry(name);
    for (std::size_t c = 0; c < lhs.cols(); ++c)
        report.record(name, lhs.domain().legs(c), Tensor::column(lhs, c), Tensor::column(rhs, c));
}

} // namespace crossbi
