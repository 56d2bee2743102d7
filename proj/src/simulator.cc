// Copyright 2026 The amegraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "amegraph/simulator.h"

#include <cmath>
#include <iomanip>
#include <numbers>
#include <random>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "amegraph/error.h"

namespace amegraph {

namespace {

std::vector<Complex> root_table(Prime p) {
    std::vector<Complex> roots(p.value());
    for (std::uint32_t k = 0; k < p.value(); ++k) {
        roots[k] = std::polar(1.0, 2.0 * std::numbers::pi * k / p.value());
    }
    return roots;
}

void check_qudit(const StateVector &s, std::size_t i) {
    if (i >= s.qudits()) {
        throw Error(ErrorCode::kVertexOutOfRange, "qudit " + std::to_string(i) + " out of range");
    }
}

// Removes the listed qudits by contracting them against `bra`, whose index is
// little-endian over `qudits`. Remaining qudits keep their relative order.
StateVector contract(const StateVector &s, std::span<const std::size_t> qudits, const Eigen::VectorXcd &bra) {
    const std::size_t n = s.qudits();
    const std::uint32_t p = s.prime().value();
    std::vector<bool> removed(n, false);
    for (std::size_t q : qudits) {
        check_qudit(s, q);
        if (removed[q]) {
            throw Error(ErrorCode::kInvalidArgument, "repeated qudit");
        }
        removed[q] = true;
    }
    std::vector<std::size_t> kept;
    for (std::size_t q = 0; q < n; ++q) {
        if (!removed[q]) {
            kept.push_back(q);
        }
    }
    const std::size_t out_dim = s.dim() / static_cast<std::size_t>(bra.size());
    std::vector<std::size_t> offsets(static_cast<std::size_t>(bra.size()), 0);
    for (std::size_t c = 0; c < offsets.size(); ++c) {
        std::size_t rest = c;
        for (std::size_t q : qudits) {
            offsets[c] += (rest % p) * s.stride(q);
            rest /= p;
        }
    }
    std::vector<Complex> out(out_dim);
    for (std::size_t y = 0; y < out_dim; ++y) {
        std::size_t base = 0;
        std::size_t rest = y;
        for (std::size_t q : kept) {
            base += (rest % p) * s.stride(q);
            rest /= p;
        }
        Complex acc = 0;
        for (std::size_t c = 0; c < offsets.size(); ++c) {
            acc += bra[static_cast<Eigen::Index>(c)] * s[base + offsets[c]];
        }
        out[y] = acc;
    }
    return StateVector(s.prime(), kept.size(), std::move(out));
}

Measured renormalize(StateVector unnormalized) {
    double prob = unnormalized.norm();
    prob *= prob;
    if (prob < 1e-12) {
        throw Error(ErrorCode::kZeroProbability, "measurement outcome has zero probability");
    }
    return Measured{prob, unnormalized.normalized()};
}

std::vector<std::size_t> complement_of(std::span<const std::size_t> keep, std::size_t n) {
    std::vector<bool> in(n, false);
    for (std::size_t q : keep) {
        if (q >= n || in[q]) {
            throw Error(ErrorCode::kInvalidArgument, "kept qudits must be distinct and in range");
        }
        in[q] = true;
    }
    std::vector<std::size_t> rest;
    for (std::size_t q = 0; q < n; ++q) {
        if (!in[q]) {
            rest.push_back(q);
        }
    }
    return rest;
}

std::vector<std::size_t> subset_offsets(const StateVector &s, std::span<const std::size_t> qudits) {
    const std::uint32_t p = s.prime().value();
    std::size_t count = 1;
    for (std::size_t i = 0; i < qudits.size(); ++i) {
        count *= p;
    }
    std::vector<std::size_t> offsets(count, 0);
    for (std::size_t c = 0; c < count; ++c) {
        std::size_t rest = c;
        for (std::size_t q : qudits) {
            offsets[c] += (rest % p) * s.stride(q);
            rest /= p;
        }
    }
    return offsets;
}

void fourier_in_place(std::vector<Complex> &amps, const StateVector &shape, std::size_t i, bool dagger) {
    const std::uint32_t p = shape.prime().value();
    const std::size_t stride = shape.stride(i);
    const auto roots = root_table(shape.prime());
    const double scale = 1.0 / std::sqrt(static_cast<double>(p));
    std::vector<Complex> in(p);
    for (std::size_t base = 0; base < amps.size(); ++base) {
        if (base / stride % p != 0) {
            continue;
        }
        for (std::uint32_t k = 0; k < p; ++k) {
            in[k] = amps[base + k * stride];
        }
        for (std::uint32_t j = 0; j < p; ++j) {
            Complex acc = 0;
            for (std::uint32_t k = 0; k < p; ++k) {
                std::uint32_t e = j * k % p;
                acc += roots[dagger ? (p - e) % p : e] * in[k];
            }
            amps[base + j * stride] = acc * scale;
        }
    }
}

}  // namespace

std::uint64_t capped_power(Prime p, std::size_t n, std::uint64_t cap) {
    std::uint64_t v = 1;
    for (std::size_t i = 0; i < n; ++i) {
        v *= p.value();
        if (v > cap) {
            return cap + 1;
        }
    }
    return v;
}

StateVector::StateVector(Prime p, std::size_t n, std::uint64_t cap) : p_(p), n_(n) {
    std::uint64_t dim = capped_power(p, n, cap);
    if (dim > cap) {
        throw Error(ErrorCode::kTooLarge, "p^n exceeds the amplitude cap");
    }
    amps_.assign(dim, Complex(0));
    amps_[0] = 1;
    for (std::size_t i = 0, s = 1; i < n; ++i, s *= p.value()) {
        strides_.push_back(s);
    }
}

StateVector::StateVector(Prime p, std::size_t n, std::vector<Complex> amplitudes)
    : p_(p), n_(n), amps_(std::move(amplitudes)) {
    std::size_t expected = 1;
    for (std::size_t i = 0; i < n; ++i) {
        strides_.push_back(expected);
        expected *= p.value();
    }
    if (amps_.size() != expected) {
        throw Error(ErrorCode::kDimensionMismatch, "amplitude count must be p^n");
    }
}

double StateVector::norm() const {
    double acc = 0;
    for (const Complex &a : amps_) {
        acc += std::norm(a);
    }
    return std::sqrt(acc);
}

StateVector StateVector::normalized() const {
    double nrm = norm();
    if (nrm == 0) {
        throw Error(ErrorCode::kZeroProbability, "cannot normalize the zero vector");
    }
    StateVector out = *this;
    for (Complex &a : out.amps_) {
        a /= nrm;
    }
    return out;
}

Complex root_of_unity(Prime p, std::uint64_t k) {
    return root_table(p)[k % p.value()];
}

StateVector basis_state(Prime p, std::size_t n, std::span<const Residue> digits, std::uint64_t cap) {
    if (digits.size() != n) {
        throw Error(ErrorCode::kDimensionMismatch, "one digit per qudit");
    }
    StateVector zero(p, n, cap);
    std::vector<Complex> amps(zero.dim(), Complex(0));
    std::size_t index = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (digits[i] >= p.value()) {
            throw Error(ErrorCode::kWeightOutOfRange, "digit out of range");
        }
        index += digits[i] * zero.stride(i);
    }
    amps[index] = 1;
    return StateVector(p, n, std::move(amps));
}

StateVector apply_z(const StateVector &s, std::size_t i, Residue power) {
    check_qudit(s, i);
    const auto roots = root_table(s.prime());
    const std::uint32_t p = s.prime().value();
    std::vector<Complex> amps = s.amplitudes();
    for (std::size_t idx = 0; idx < amps.size(); ++idx) {
        amps[idx] *= roots[static_cast<std::uint64_t>(power) * s.digit(idx, i) % p];
    }
    return StateVector(s.prime(), s.qudits(), std::move(amps));
}

StateVector apply_x(const StateVector &s, std::size_t i, Residue power) {
    check_qudit(s, i);
    const std::uint32_t p = s.prime().value();
    const std::size_t stride = s.stride(i);
    std::vector<Complex> amps(s.dim());
    for (std::size_t idx = 0; idx < amps.size(); ++idx) {
        Residue d = s.digit(idx, i);
        Residue nd = (d + power) % p;
        amps[idx + (static_cast<std::size_t>(nd) - d) * stride] = s[idx];
    }
    return StateVector(s.prime(), s.qudits(), std::move(amps));
}

StateVector apply_f(const StateVector &s, std::size_t i) {
    check_qudit(s, i);
    std::vector<Complex> amps = s.amplitudes();
    fourier_in_place(amps, s, i, false);
    return StateVector(s.prime(), s.qudits(), std::move(amps));
}

StateVector apply_f_dag(const StateVector &s, std::size_t i) {
    check_qudit(s, i);
    std::vector<Complex> amps = s.amplitudes();
    fourier_in_place(amps, s, i, true);
    return StateVector(s.prime(), s.qudits(), std::move(amps));
}

StateVector apply_cz(const StateVector &s, std::size_t i, std::size_t j, Residue power) {
    check_qudit(s, i);
    check_qudit(s, j);
    if (i == j) {
        throw Error(ErrorCode::kSelfLoop, "CZ needs two distinct qudits");
    }
    const auto roots = root_table(s.prime());
    const std::uint64_t p = s.prime().value();
    std::vector<Complex> amps = s.amplitudes();
    for (std::size_t idx = 0; idx < amps.size(); ++idx) {
        amps[idx] *= roots[power % p * s.digit(idx, i) % p * s.digit(idx, j) % p];
    }
    return StateVector(s.prime(), s.qudits(), std::move(amps));
}

StateVector apply_pauli(const StateVector &s, std::span<const Residue> a, std::span<const Residue> b) {
    if (a.size() != s.qudits() || b.size() != s.qudits()) {
        throw Error(ErrorCode::kDimensionMismatch, "Pauli exponents need one entry per qudit");
    }
    const std::uint32_t p = s.prime().value();
    const auto roots = root_table(s.prime());
    std::uint64_t ab = 0;
    for (std::size_t q = 0; q < s.qudits(); ++q) {
        ab += static_cast<std::uint64_t>(a[q]) * b[q];
    }
    Complex scalar = 1;
    if (p == 2) {
        static const Complex kPowI[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        scalar = kPowI[ab % 4];
    }
    std::vector<Complex> amps(s.dim());
    for (std::size_t idx = 0; idx < s.dim(); ++idx) {
        std::uint64_t phase = 0;
        std::size_t target = 0;
        for (std::size_t q = 0; q < s.qudits(); ++q) {
            Residue d = s.digit(idx, q);
            phase += static_cast<std::uint64_t>(b[q]) * d;
            target += ((d + a[q]) % p) * s.stride(q);
        }
        amps[target] = scalar * roots[phase % p] * s[idx];
    }
    return StateVector(s.prime(), s.qudits(), std::move(amps));
}

StateVector apply_unitary(const StateVector &s, std::span<const std::size_t> qudits, const Eigen::MatrixXcd &u) {
    for (std::size_t q : qudits) {
        check_qudit(s, q);
    }
    std::vector<std::size_t> offsets = subset_offsets(s, qudits);
    if (static_cast<std::size_t>(u.rows()) != offsets.size() || u.rows() != u.cols()) {
        throw Error(ErrorCode::kDimensionMismatch, "unitary size must be p^|qudits|");
    }
    std::vector<std::size_t> rest = complement_of(qudits, s.qudits());
    std::vector<std::size_t> bases = subset_offsets(s, rest);
    std::vector<Complex> amps(s.dim());
    Eigen::VectorXcd v(u.rows());
    for (std::size_t base : bases) {
        for (std::size_t c = 0; c < offsets.size(); ++c) {
            v[static_cast<Eigen::Index>(c)] = s[base + offsets[c]];
        }
        Eigen::VectorXcd w = u * v;
        for (std::size_t c = 0; c < offsets.size(); ++c) {
            amps[base + offsets[c]] = w[static_cast<Eigen::Index>(c)];
        }
    }
    return StateVector(s.prime(), s.qudits(), std::move(amps));
}

StateVector apply_ugh(const StateVector &s, std::size_t i, Residue g, Residue h) {
    check_qudit(s, i);
    const std::uint32_t p = s.prime().value();
    const auto roots = root_table(s.prime());
    const std::size_t stride = s.stride(i);
    std::vector<Complex> amps(s.dim());
    for (std::size_t idx = 0; idx < s.dim(); ++idx) {
        Residue j = s.digit(idx, i);
        Residue src = (j + h) % p;
        amps[idx] = roots[static_cast<std::uint64_t>(j) * g % p] *
                    s[idx + (static_cast<std::size_t>(src) - j) * stride];
    }
    return StateVector(s.prime(), s.qudits(), std::move(amps));
}

StateVector build_graph_state(const Graph &g, std::uint64_t cap) {
    StateVector s(g.prime(), g.size(), cap);
    std::vector<Complex> amps = s.amplitudes();
    for (std::size_t i = 0; i < g.size(); ++i) {
        fourier_in_place(amps, s, i, true);
    }
    const auto roots = root_table(g.prime());
    const std::uint64_t p = g.prime().value();
    for (const Edge &e : g.edges()) {
        for (std::size_t idx = 0; idx < amps.size(); ++idx) {
            amps[idx] *= roots[e.w * static_cast<std::uint64_t>(s.digit(idx, e.i)) % p * s.digit(idx, e.j) % p];
        }
    }
    return StateVector(g.prime(), g.size(), std::move(amps));
}

StateVector build_labeled(const LabeledGraph &s, std::uint64_t cap) {
    StateVector out = build_graph_state(s.graph, cap);
    for (std::size_t i = 0; i < s.z.size(); ++i) {
        if (s.z[i] != 0) {
            out = apply_z(out, i, s.z[i]);
        }
    }
    return out;
}

StateVector stabilizer_state(const GeneratorMatrix &m, std::uint64_t cap) {
    if (m.rows() != m.qudits() || !is_valid(m)) {
        throw Error(ErrorCode::kInvalidInput, "need a valid generator matrix with k = n");
    }
    const Prime p = m.prime();
    const std::size_t n = m.qudits();
    std::mt19937_64 rng(0x5eed);
    std::normal_distribution<double> gauss;
    for (int attempt = 0; attempt < 8; ++attempt) {
        StateVector start(p, n, cap);
        std::vector<Complex> amps(start.dim());
        for (Complex &a : amps) {
            a = Complex(gauss(rng), gauss(rng));
        }
        StateVector v(p, n, std::move(amps));
        for (std::size_t r = 0; r < m.rows(); ++r) {
            auto a = m.x().row_span(r);
            auto b = m.z().row_span(r);
            std::vector<Complex> sum(v.dim(), Complex(0));
            StateVector term = v;
            for (std::uint32_t t = 0; t < p.value(); ++t) {
                for (std::size_t idx = 0; idx < sum.size(); ++idx) {
                    sum[idx] += term[idx];
                }
                term = apply_pauli(term, a, b);
            }
            for (Complex &c : sum) {
                c /= static_cast<double>(p.value());
            }
            v = StateVector(p, n, std::move(sum));
        }
        if (v.norm() > 1e-6) {
            return v.normalized();
        }
    }
    throw Error(ErrorCode::kInternalError, "stabilizer projection vanished");
}

StateVector tensor(const StateVector &a, const StateVector &b, std::uint64_t cap) {
    if (!(a.prime() == b.prime())) {
        throw Error(ErrorCode::kDimensionMismatch, "tensor factors must share the prime");
    }
    if (capped_power(a.prime(), a.qudits() + b.qudits(), cap) > cap) {
        throw Error(ErrorCode::kTooLarge, "p^n exceeds the amplitude cap");
    }
    std::vector<Complex> amps(a.dim() * b.dim());
    for (std::size_t j = 0; j < b.dim(); ++j) {
        for (std::size_t i = 0; i < a.dim(); ++i) {
            amps[i + a.dim() * j] = a[i] * b[j];
        }
    }
    return StateVector(a.prime(), a.qudits() + b.qudits(), std::move(amps));
}

StateVector reorder_qudits(const StateVector &s, std::span<const std::size_t> order) {
    if (order.size() != s.qudits() || !complement_of(order, s.qudits()).empty()) {
        throw Error(ErrorCode::kInvalidArgument, "order must be a permutation of the qudits");
    }
    std::vector<std::size_t> offsets = subset_offsets(s, order);
    std::vector<Complex> amps(s.dim());
    for (std::size_t idx = 0; idx < s.dim(); ++idx) {
        amps[idx] = s[offsets[idx]];
    }
    return StateVector(s.prime(), s.qudits(), std::move(amps));
}

Complex inner(const StateVector &a, const StateVector &b) {
    if (!(a.prime() == b.prime()) || a.qudits() != b.qudits()) {
        throw Error(ErrorCode::kDimensionMismatch, "states live in different spaces");
    }
    Complex acc = 0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        acc += std::conj(a[i]) * b[i];
    }
    return acc;
}

double fidelity(const StateVector &a, const StateVector &b) {
    return std::norm(inner(a, b));
}

DensityMatrix reduced_density(const StateVector &s, std::span<const std::size_t> keep) {
    std::vector<std::size_t> rest = complement_of(keep, s.qudits());
    std::vector<std::size_t> rows = subset_offsets(s, keep);
    std::vector<std::size_t> cols = subset_offsets(s, rest);
    Eigen::MatrixXcd m(rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < cols.size(); ++c) {
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = s[rows[r] + cols[c]];
        }
    }
    DensityMatrix out{s.prime(), std::vector<std::size_t>(keep.begin(), keep.end()), Eigen::MatrixXcd()};
    out.rho = m * m.adjoint();
    return out;
}

double entropy_edits(const DensityMatrix &rho) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho.rho, Eigen::EigenvaluesOnly);
    double acc = 0;
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
        double lambda = solver.eigenvalues()[i];
        if (lambda > 1e-15) {
            acc -= lambda * std::log(lambda);
        }
    }
    return acc / std::log(static_cast<double>(rho.p.value()));
}

double cut_entropy(const StateVector &s, const VertexSet &k) {
    std::vector<std::size_t> rest = complement_of(k, s.qudits());
    const auto &smaller = k.size() <= rest.size() ? k : rest;
    if (smaller.empty()) {
        return 0.0;
    }
    return entropy_edits(reduced_density(s, smaller));
}

double trace_distance(const DensityMatrix &a, const DensityMatrix &b) {
    if (a.rho.rows() != b.rho.rows() || a.rho.cols() != b.rho.cols()) {
        throw Error(ErrorCode::kDimensionMismatch, "density matrices differ in size");
    }
    Eigen::MatrixXcd diff = a.rho - b.rho;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(diff, Eigen::EigenvaluesOnly);
    return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

Measured z_measure_dense(const StateVector &s, std::size_t i, Residue outcome) {
    std::vector<Residue> outcomes{outcome};
    return z_measure_dense(s, VertexSet{i}, outcomes);
}

Measured z_measure_dense(const StateVector &s, const VertexSet &qudits, std::span<const Residue> outcomes) {
    if (outcomes.size() != qudits.size()) {
        throw Error(ErrorCode::kDimensionMismatch, "one outcome per measured qudit");
    }
    const std::uint32_t p = s.prime().value();
    std::size_t dim = 1;
    std::size_t index = 0;
    for (std::size_t q = 0; q < qudits.size(); ++q) {
        if (outcomes[q] >= p) {
            throw Error(ErrorCode::kWeightOutOfRange, "outcome out of range");
        }
        index += outcomes[q] * dim;
        dim *= p;
    }
    Eigen::VectorXcd bra = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim));
    bra[static_cast<Eigen::Index>(index)] = 1;
    return renormalize(contract(s, qudits, bra));
}

Eigen::VectorXcd bell_vector(Prime p, Residue g, Residue h) {
    const std::uint32_t q = p.value();
    const auto roots = root_table(p);
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(q) * q);
    const double scale = 1.0 / std::sqrt(static_cast<double>(q));
    for (std::uint32_t j = 0; j < q; ++j) {
        v[j + q * ((j + h) % q)] = roots[static_cast<std::uint64_t>(j) * g % q] * scale;
    }
    return v;
}

Measured bell_measure(const StateVector &s, std::size_t first, std::size_t second, Residue g, Residue h) {
    if (first == second) {
        throw Error(ErrorCode::kInvalidArgument, "Bell measurement needs two qudits");
    }
    std::vector<std::size_t> pair{first, second};
    return renormalize(contract(s, pair, bell_vector(s.prime(), g, h).conjugate()));
}

std::string to_text(const StateVector &s) {
    std::ostringstream out;
    out << s.prime().value() << ' ' << s.qudits() << '\n' << std::setprecision(17);
    for (const Complex &a : s.amplitudes()) {
        out << a.real() << ' ' << a.imag() << '\n';
    }
    return out.str();
}

}  // namespace amegraph
