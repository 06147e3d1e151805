// Copyright 2026 The qwtc authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Multipartite quantum states over labeled registers.
 *
 * A register is addressed by label everywhere; positional indexing never
 * crosses a module boundary. Classical registers live inside the same dense
 * matrix as block-diagonal structure. All values are immutable after
 * construction and every operation is pure.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qwtc/common.hpp"
#include "qwtc/linalg.hpp"

namespace qwtc {

enum class RegKind { classical, quantum };

struct Register {
    std::string label;
    int dim = 1;
    RegKind kind = RegKind::quantum;
};

inline Register creg(std::string label, int dim) { return Register{std::move(label), dim, RegKind::classical}; }
inline Register qreg(std::string label, int dim) { return Register{std::move(label), dim, RegKind::quantum}; }

/// Probability vector: nonnegative entries summing to one.
struct Distribution {
    std::vector<double> p;

    Distribution() = default;
    explicit Distribution(std::vector<double> probs) : p(std::move(probs)) { validate(); }

    void validate() const {
        double s = 0.0;
        for (double x : p) {
            if (x < 0.0) throw validation_error("Distribution: negative probability entry");
            s += x;
        }
        if (std::abs(s - 1.0) > tol::distribution)
            throw validation_error("Distribution: entries sum to " + std::to_string(s) + ", expected 1");
    }

    int size() const { return static_cast<int>(p.size()); }
    double operator[](int i) const { return p[static_cast<std::size_t>(i)]; }
};

inline Distribution uniform_distribution(int n) {
    return Distribution(std::vector<double>(static_cast<std::size_t>(n), 1.0 / n));
}

inline Distribution point_mass(int n, int at) {
    std::vector<double> p(static_cast<std::size_t>(n), 0.0);
    p[static_cast<std::size_t>(at)] = 1.0;
    return Distribution(std::move(p));
}

/// Hermitian PSD unit-trace matrix over an ordered list of subsystem
/// dimensions.
struct DensityOperator {
    std::vector<int> dims;
    Mat m;

    DensityOperator() = default;
    DensityOperator(std::vector<int> d, Mat mat, bool validate_now = true)
        : dims(std::move(d)), m(std::move(mat)) {
        if (validate_now) validate();
    }
    explicit DensityOperator(Mat mat, bool validate_now = true)
        : dims{static_cast<int>(mat.rows())}, m(std::move(mat)) {
        if (validate_now) validate();
    }

    int dim() const { return static_cast<int>(m.rows()); }

    void validate() const {
        long long prod = 1;
        for (int d : dims) {
            if (d < 1) throw validation_error("DensityOperator: register dimension must be >= 1");
            prod *= d;
        }
        if (m.rows() != m.cols() || m.rows() != prod)
            throw validation_error("DensityOperator: matrix size does not match register dimensions");
        if (!is_hermitian(m)) throw validation_error("DensityOperator: not Hermitian within 1e-9");
        if (std::abs(m.trace().real() - 1.0) > tol::trace || std::abs(m.trace().imag()) > tol::trace)
            throw validation_error("DensityOperator: trace differs from 1 beyond 1e-9");
        if (min_eigenvalue(m) < -tol::psd)
            throw validation_error("DensityOperator: negative eigenvalue beyond 1e-9");
    }
};

namespace detail {

/// Mixed-radix strides; index = sum digit[k] * stride[k], last register fastest.
inline std::vector<long long> strides(const std::vector<int>& dims) {
    std::vector<long long> s(dims.size());
    long long acc = 1;
    for (std::size_t k = dims.size(); k-- > 0;) {
        s[k] = acc;
        acc *= dims[k];
    }
    return s;
}

inline long long total_dim(const std::vector<int>& dims) {
    long long acc = 1;
    for (int d : dims) acc *= d;
    return acc;
}

inline std::vector<int> digits_of(long long index, const std::vector<int>& dims) {
    std::vector<int> dig(dims.size());
    for (std::size_t k = dims.size(); k-- > 0;) {
        dig[k] = static_cast<int>(index % dims[k]);
        index /= dims[k];
    }
    return dig;
}

}  // namespace detail

class MultipartiteState {
  public:
    MultipartiteState() = default;

    MultipartiteState(std::vector<Register> registers, Mat op, bool validate_now = true)
        : regs_(std::move(registers)), op_(std::move(op)) {
        if (validate_now) validate();
    }

    const std::vector<Register>& registers() const { return regs_; }
    const Mat& op() const { return op_; }
    int dim() const { return static_cast<int>(op_.rows()); }

    std::vector<int> dims() const {
        std::vector<int> d(regs_.size());
        for (std::size_t i = 0; i < regs_.size(); ++i) d[i] = regs_[i].dim;
        return d;
    }

    bool has_register(const std::string& label) const {
        return std::any_of(regs_.begin(), regs_.end(), [&](const Register& r) { return r.label == label; });
    }

    const Register& find(const std::string& label) const {
        for (const auto& r : regs_)
            if (r.label == label) return r;
        throw validation_error("unknown register label: " + label);
    }

    int index_of(const std::string& label) const {
        for (std::size_t i = 0; i < regs_.size(); ++i)
            if (regs_[i].label == label) return static_cast<int>(i);
        throw validation_error("unknown register label: " + label);
    }

    void validate() const {
        std::set<std::string> seen;
        for (const auto& r : regs_) {
            if (r.dim < 1) throw validation_error("register " + r.label + ": dimension must be >= 1");
            if (!seen.insert(r.label).second)
                throw validation_error("duplicate register label: " + r.label);
        }
        DensityOperator probe(dims(), op_, false);
        probe.validate();
        check_classical_diagonal();
    }

    /// Classical registers must be diagonal in the computational basis after
    /// tracing out all quantum registers.
    void check_classical_diagonal() const;

  private:
    std::vector<Register> regs_;
    Mat op_;
};

/// Kronecker product of plain matrices, row-major digit convention.
inline Mat kron(const Mat& a, const Mat& b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

/// Compose two disjoint-label states; registers concatenate, operators
/// Kronecker.
inline MultipartiteState tensor(const MultipartiteState& a, const MultipartiteState& b) {
    for (const auto& r : b.registers())
        if (a.has_register(r.label))
            throw validation_error("tensor: register label collision: " + r.label);
    std::vector<Register> regs = a.registers();
    regs.insert(regs.end(), b.registers().begin(), b.registers().end());
    return MultipartiteState(std::move(regs), kron(a.op(), b.op()), false);
}

/// Trace out the registers named in `drop`; remaining registers keep their
/// relative order.
inline MultipartiteState partial_trace(const MultipartiteState& s, const std::set<std::string>& drop) {
    for (const auto& label : drop)
        (void)s.find(label);
    std::vector<Register> kept;
    std::vector<int> kept_pos, drop_pos;
    const auto& regs = s.registers();
    for (std::size_t i = 0; i < regs.size(); ++i) {
        if (drop.count(regs[i].label)) {
            drop_pos.push_back(static_cast<int>(i));
        } else {
            kept.push_back(regs[i]);
            kept_pos.push_back(static_cast<int>(i));
        }
    }
    const std::vector<int> all_dims = s.dims();
    std::vector<int> kept_dims, drop_dims;
    for (int i : kept_pos) kept_dims.push_back(all_dims[static_cast<std::size_t>(i)]);
    for (int i : drop_pos) drop_dims.push_back(all_dims[static_cast<std::size_t>(i)]);

    const long long dk = detail::total_dim(kept_dims);
    const long long dt = detail::total_dim(drop_dims);
    const auto all_strides = detail::strides(all_dims);

    // full index of (kept digits k, dropped digits t)
    auto full_index = [&](long long k, long long t) {
        auto kd = detail::digits_of(k, kept_dims);
        auto td = detail::digits_of(t, drop_dims);
        long long idx = 0;
        for (std::size_t a = 0; a < kept_pos.size(); ++a)
            idx += kd[a] * all_strides[static_cast<std::size_t>(kept_pos[a])];
        for (std::size_t a = 0; a < drop_pos.size(); ++a)
            idx += td[a] * all_strides[static_cast<std::size_t>(drop_pos[a])];
        return idx;
    };

    std::vector<std::vector<long long>> fmap(static_cast<std::size_t>(dk),
                                             std::vector<long long>(static_cast<std::size_t>(dt)));
    for (long long k = 0; k < dk; ++k)
        for (long long t = 0; t < dt; ++t) fmap[static_cast<std::size_t>(k)][static_cast<std::size_t>(t)] = full_index(k, t);

    Mat out = Mat::Zero(dk, dk);
    const Mat& in = s.op();
    for (long long i = 0; i < dk; ++i)
        for (long long j = 0; j < dk; ++j) {
            Complex acc(0, 0);
            for (long long t = 0; t < dt; ++t)
                acc += in(fmap[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)],
                          fmap[static_cast<std::size_t>(j)][static_cast<std::size_t>(t)]);
            out(i, j) = acc;
        }
    return MultipartiteState(std::move(kept), std::move(out), false);
}

/// Keep only the named registers (complement is traced out); order inside the
/// result matches the state's declared order, not the query order.
inline MultipartiteState marginal(const MultipartiteState& s, const std::set<std::string>& keep) {
    for (const auto& label : keep)
        (void)s.find(label);
    std::set<std::string> drop;
    for (const auto& r : s.registers())
        if (!keep.count(r.label)) drop.insert(r.label);
    return partial_trace(s, drop);
}

/// Reorder registers to the given label sequence (a permutation of them all).
inline MultipartiteState permute(const MultipartiteState& s, const std::vector<std::string>& order) {
    if (order.size() != s.registers().size())
        throw validation_error("permute: order must list every register exactly once");
    std::vector<int> src_pos;
    std::vector<Register> regs;
    for (const auto& label : order) {
        src_pos.push_back(s.index_of(label));
        regs.push_back(s.find(label));
    }

    const auto old_dims = s.dims();
    std::vector<int> new_dims;
    for (int p : src_pos) new_dims.push_back(old_dims[static_cast<std::size_t>(p)]);
    const auto old_strides = detail::strides(old_dims);
    const long long d = s.dim();

    std::vector<long long> map(static_cast<std::size_t>(d));
    for (long long i = 0; i < d; ++i) {
        auto dig = detail::digits_of(i, new_dims);
        long long idx = 0;
        for (std::size_t a = 0; a < src_pos.size(); ++a)
            idx += dig[a] * old_strides[static_cast<std::size_t>(src_pos[a])];
        map[static_cast<std::size_t>(i)] = idx;
    }
    Mat out(d, d);
    for (long long i = 0; i < d; ++i)
        for (long long j = 0; j < d; ++j)
            out(i, j) = s.op()(map[static_cast<std::size_t>(i)], map[static_cast<std::size_t>(j)]);
    return MultipartiteState(std::move(regs), std::move(out), false);
}

inline void MultipartiteState::check_classical_diagonal() const {
    std::set<std::string> quantum;
    bool any_classical = false;
    for (const auto& r : regs_) {
        if (r.kind == RegKind::quantum)
            quantum.insert(r.label);
        else
            any_classical = true;
    }
    if (!any_classical) return;
    const Mat reduced = quantum.empty() ? op_ : partial_trace(*this, quantum).op();
    for (Eigen::Index i = 0; i < reduced.rows(); ++i)
        for (Eigen::Index j = 0; j < reduced.cols(); ++j)
            if (i != j && std::abs(reduced(i, j)) > tol::classical_diag)
                throw validation_error("classical registers are not diagonal in the computational basis");
}

/// Tr|sigma - rho| (unnormalized, in [0, 2]).
inline double trace_distance(const DensityOperator& rho, const DensityOperator& sigma) {
    if (rho.dim() != sigma.dim()) throw validation_error("trace_distance: dimension mismatch");
    return trace_norm_hermitian(sigma.m - rho.m);
}

inline double trace_distance(const Mat& rho, const Mat& sigma) {
    if (rho.rows() != sigma.rows()) throw validation_error("trace_distance: dimension mismatch");
    return trace_norm_hermitian(sigma - rho);
}

/// Fidelity F = ||sqrt(rho) sqrt(sigma)||_1^2, so F(rho, rho) = 1.
inline double fidelity(const Mat& rho, const Mat& sigma) {
    if (rho.rows() != sigma.rows()) throw validation_error("fidelity: dimension mismatch");
    const Mat sr = matrix_sqrt(sigma);
    Eigh e = eigh(Mat(sr * rho * sr));
    double root = 0.0;
    for (Eigen::Index i = 0; i < e.values.size(); ++i) root += std::sqrt(clip0(e.values(i)));
    const double f = root * root;
    return std::min(1.0, std::max(0.0, f));
}

inline double fidelity(const DensityOperator& rho, const DensityOperator& sigma) {
    return fidelity(rho.m, sigma.m);
}

/// Purified distance P = sqrt(1 - F). With F the squared root-fidelity this
/// is the standard metric; the source convention squares F once more, which
/// would make P degenerate, so the root-fidelity reading is used throughout.
inline double purified_distance(const Mat& rho, const Mat& sigma) {
    return std::sqrt(clip0(1.0 - fidelity(rho, sigma)));
}

inline double purified_distance(const DensityOperator& rho, const DensityOperator& sigma) {
    return purified_distance(rho.m, sigma.m);
}

inline double purified_distance(const MultipartiteState& a, const MultipartiteState& b) {
    return purified_distance(a.op(), b.op());
}

/// Block-diagonal classical-quantum state: sum_x p(x) |x><x| (x) rho_x.
/// `p` runs over the joint index of `classical` (row-major), one conditional
/// per index.
inline MultipartiteState cq_state(const Distribution& p, const std::vector<Mat>& conditionals,
                                  const std::vector<Register>& classical,
                                  const std::vector<Register>& quantum) {
    std::vector<int> cdims;
    for (const auto& r : classical) {
        if (r.kind != RegKind::classical) throw validation_error("cq_state: register " + r.label + " is not classical");
        cdims.push_back(r.dim);
    }
    long long nc = detail::total_dim(cdims);
    if (p.size() != nc) throw validation_error("cq_state: distribution size does not match classical index space");
    if (conditionals.size() != static_cast<std::size_t>(nc))
        throw validation_error("cq_state: need one conditional per classical index");
    long long dq = 1;
    for (const auto& r : quantum) dq *= r.dim;
    for (const auto& c : conditionals)
        if (c.rows() != dq || c.cols() != dq)
            throw validation_error("cq_state: conditional dimension mismatch");

    Mat out = Mat::Zero(nc * dq, nc * dq);
    for (long long x = 0; x < nc; ++x)
        out.block(x * dq, x * dq, dq, dq) = p[static_cast<int>(x)] * conditionals[static_cast<std::size_t>(x)];
    std::vector<Register> regs = classical;
    regs.insert(regs.end(), quantum.begin(), quantum.end());
    return MultipartiteState(std::move(regs), std::move(out), false);
}

/// rho_A (x) rho_B as a matrix in the register order of marginal(s, A u B).
/// A and B must be disjoint.
inline Mat product_of_marginals(const MultipartiteState& s, const std::set<std::string>& a,
                                const std::set<std::string>& b) {
    for (const auto& label : a)
        if (b.count(label)) throw validation_error("product_of_marginals: register sets overlap at " + label);
    std::set<std::string> ab = a;
    ab.insert(b.begin(), b.end());
    auto prod = tensor(marginal(s, a), marginal(s, b));
    const auto joint = marginal(s, ab);
    std::vector<std::string> order;
    for (const auto& r : joint.registers()) order.push_back(r.label);
    return permute(prod, order).op();
}

/// One diagonal block of a cq state: the classical index tuple, its
/// probability, and the normalized conditional state on the remaining
/// registers.
struct ClassicalBlock {
    std::vector<int> index;
    double prob = 0.0;
    MultipartiteState state;
};

/// Decompose along classical registers `cond` (any order-subset of the
/// state's classical registers). Blocks with probability <= floor are
/// dropped. Conditionals keep the remaining registers in declared order.
inline std::vector<ClassicalBlock> classical_blocks(const MultipartiteState& s,
                                                    const std::vector<std::string>& cond,
                                                    double floor = 1e-12) {
    std::vector<int> cpos;
    std::vector<int> cdims;
    for (const auto& label : cond) {
        const Register& r = s.find(label);
        if (r.kind != RegKind::classical)
            throw validation_error("conditioning register is not classical: " + label);
        cpos.push_back(s.index_of(label));
        cdims.push_back(r.dim);
    }
    std::vector<Register> rest;
    std::vector<int> rest_pos;
    const auto& regs = s.registers();
    for (std::size_t i = 0; i < regs.size(); ++i) {
        if (std::find(cpos.begin(), cpos.end(), static_cast<int>(i)) == cpos.end()) {
            rest.push_back(regs[i]);
            rest_pos.push_back(static_cast<int>(i));
        }
    }
    const auto all_dims = s.dims();
    const auto all_strides = detail::strides(all_dims);
    std::vector<int> rest_dims;
    for (int i : rest_pos) rest_dims.push_back(all_dims[static_cast<std::size_t>(i)]);
    const long long dr = detail::total_dim(rest_dims);
    const long long ncond = detail::total_dim(cdims);

    std::vector<ClassicalBlock> blocks;
    for (long long c = 0; c < ncond; ++c) {
        auto cdig = detail::digits_of(c, cdims);
        long long base = 0;
        for (std::size_t a = 0; a < cpos.size(); ++a)
            base += cdig[a] * all_strides[static_cast<std::size_t>(cpos[a])];
        Mat block(dr, dr);
        for (long long i = 0; i < dr; ++i) {
            auto idig = detail::digits_of(i, rest_dims);
            long long row = base;
            for (std::size_t a = 0; a < rest_pos.size(); ++a)
                row += idig[a] * all_strides[static_cast<std::size_t>(rest_pos[a])];
            for (long long j = 0; j < dr; ++j) {
                auto jdig = detail::digits_of(j, rest_dims);
                long long col = base;
                for (std::size_t a = 0; a < rest_pos.size(); ++a)
                    col += jdig[a] * all_strides[static_cast<std::size_t>(rest_pos[a])];
                block(i, j) = s.op()(row, col);
            }
        }
        const double prob = block.trace().real();
        if (prob <= floor) continue;
        blocks.push_back(ClassicalBlock{cdig, prob, MultipartiteState(rest, Mat(block / prob), false)});
    }
    return blocks;
}

}  // namespace qwtc
