// Copyright 2026 The qudit-sculpt Authors
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

#include "sculpt/fock.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace sculpt {

namespace {

using Accumulator = std::unordered_map<FockBasisState, Complex, FockBasisStateHash>;

SparseState finish(const ModeLayout &layout, Accumulator &&acc, double tol) {
    std::vector<SparseState::Term> terms;
    terms.reserve(acc.size());
    for (auto &[basis, amp] : acc) {
        if (std::abs(amp) >= tol && amp != Complex(0)) {
            terms.emplace_back(basis, amp);
        }
    }
    return SparseState::from_terms(layout, std::move(terms), tol);
}

void check_rail(const SparseState &state, size_t rail) {
    if (rail >= state.layout().rail_count()) {
        throw std::out_of_range(
            "rail " + std::to_string(rail) + " out of range for layout " + state.layout().str());
    }
}

void check_same_layout(const SparseState &a, const SparseState &b) {
    if (!(a.layout() == b.layout())) {
        throw std::invalid_argument("layout mismatch: " + a.layout().str() + " vs " + b.layout().str());
    }
}

}  // namespace

ModeLayout::ModeLayout(size_t spatial_count, size_t internal_dim, size_t ancilla_count)
    : spatial_count_(spatial_count), internal_dim_(internal_dim), ancilla_count_(ancilla_count) {
    if (spatial_count < 1) {
        throw std::invalid_argument("layout needs at least one spatial mode");
    }
    if (internal_dim < 2) {
        throw std::invalid_argument("layout needs internal dimension >= 2");
    }
}

size_t ModeLayout::rail_of(size_t spatial, size_t internal) const {
    if (spatial >= spatial_count_ || internal >= internal_dim_) {
        throw std::out_of_range(
            "mode (" + std::to_string(spatial) + ", " + std::to_string(internal) + ") out of range for " + str());
    }
    return spatial * internal_dim_ + internal;
}

size_t ModeLayout::ancilla_rail(size_t ancilla) const {
    if (ancilla >= ancilla_count_) {
        throw std::out_of_range("ancilla " + std::to_string(ancilla) + " out of range for " + str());
    }
    return system_rail_count() + ancilla;
}

ModeLayout::Address ModeLayout::address_of(size_t rail) const {
    if (rail >= rail_count()) {
        throw std::out_of_range("rail " + std::to_string(rail) + " out of range for " + str());
    }
    if (rail >= system_rail_count()) {
        return {true, 0, 0, rail - system_rail_count()};
    }
    return {false, rail / internal_dim_, rail % internal_dim_, 0};
}

std::string ModeLayout::str() const {
    std::stringstream ss;
    ss << "ModeLayout(N=" << spatial_count_ << ", d=" << internal_dim_ << ", ancillas=" << ancilla_count_ << ")";
    return ss.str();
}

FockBasisState::FockBasisState(std::vector<uint8_t> occupations) : occupations_(std::move(occupations)) {
    photon_count_ = std::accumulate(occupations_.begin(), occupations_.end(), uint32_t{0});
}

FockBasisState FockBasisState::zeros(size_t rail_count) {
    return FockBasisState(std::vector<uint8_t>(rail_count, 0));
}

FockBasisState FockBasisState::with_delta(size_t rail, int delta) const {
    FockBasisState result = *this;
    int n = (int)result.occupations_[rail] + delta;
    if (n < 0 || n > 255) {
        throw std::out_of_range("occupation out of range on rail " + std::to_string(rail));
    }
    result.occupations_[rail] = (uint8_t)n;
    result.photon_count_ = (uint32_t)((int)photon_count_ + delta);
    return result;
}

std::string FockBasisState::str() const {
    std::stringstream ss;
    ss << "|";
    for (size_t k = 0; k < occupations_.size(); k++) {
        if (k) {
            ss << ",";
        }
        ss << (int)occupations_[k];
    }
    ss << ">";
    return ss.str();
}

size_t FockBasisStateHash::operator()(const FockBasisState &state) const {
    // FNV-1a over the occupation bytes.
    uint64_t h = 1469598103934665603ULL;
    for (uint8_t b : state.occupations()) {
        h ^= b;
        h *= 1099511628211ULL;
    }
    return (size_t)h;
}

SparseState SparseState::from_terms(ModeLayout layout, std::vector<Term> terms, double tol) {
    for (const auto &[basis, amp] : terms) {
        if (basis.size() != layout.rail_count()) {
            throw std::invalid_argument("basis state " + basis.str() + " does not fit " + layout.str());
        }
    }
    std::stable_sort(terms.begin(), terms.end(), [](const auto &a, const auto &b) {
        return a.first < b.first;
    });
    SparseState result(layout);
    for (auto &term : terms) {
        if (!result.terms_.empty() && result.terms_.back().first == term.first) {
            result.terms_.back().second += term.second;
        } else {
            result.terms_.push_back(std::move(term));
        }
    }
    std::erase_if(result.terms_, [tol](const Term &t) {
        return std::abs(t.second) < tol || t.second == Complex(0);
    });
    return result;
}

Complex SparseState::amplitude(const FockBasisState &basis) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), basis, [](const Term &t, const FockBasisState &b) {
        return t.first < b;
    });
    if (it != terms_.end() && it->first == basis) {
        return it->second;
    }
    return 0;
}

double SparseState::norm_squared() const {
    double total = 0;
    for (const auto &[basis, amp] : terms_) {
        total += std::norm(amp);
    }
    return total;
}

double SparseState::norm() const {
    return std::sqrt(norm_squared());
}

bool SparseState::is_photon_homogeneous() const {
    for (const auto &[basis, amp] : terms_) {
        if (basis.photon_count() != terms_.front().first.photon_count()) {
            return false;
        }
    }
    return true;
}

uint32_t SparseState::photon_count() const {
    return terms_.empty() ? 0 : terms_.front().first.photon_count();
}

std::string SparseState::str() const {
    if (terms_.empty()) {
        return "0";
    }
    std::stringstream ss;
    for (size_t k = 0; k < terms_.size(); k++) {
        if (k) {
            ss << " + ";
        }
        ss << "(" << terms_[k].second.real() << (terms_[k].second.imag() < 0 ? "" : "+") << terms_[k].second.imag()
           << "i)" << terms_[k].first.str();
    }
    return ss.str();
}

ModeSuperposition::ModeSuperposition(std::vector<Term> terms) : terms_(std::move(terms)) {
    std::unordered_set<size_t> seen;
    for (const auto &[rail, coef] : terms_) {
        if (!seen.insert(rail).second) {
            throw std::invalid_argument("rail " + std::to_string(rail) + " repeated in mode superposition");
        }
    }
}

double ModeSuperposition::norm() const {
    double total = 0;
    for (const auto &[rail, coef] : terms_) {
        total += std::norm(coef);
    }
    return std::sqrt(total);
}

bool ModeSuperposition::is_normalized(double tol) const {
    return std::abs(norm() - 1) <= tol;
}

ModeSuperposition ModeSuperposition::scaled(Complex factor) const {
    std::vector<Term> out = terms_;
    for (auto &[rail, coef] : out) {
        coef *= factor;
    }
    return ModeSuperposition(std::move(out));
}

SparseState vacuum(const ModeLayout &layout) {
    return SparseState::from_terms(layout, {{FockBasisState::zeros(layout.rail_count()), 1.0}});
}

SparseState basis_state(const ModeLayout &layout, std::vector<uint8_t> occupations) {
    return SparseState::from_terms(layout, {{FockBasisState(std::move(occupations)), 1.0}});
}

SparseState create(const SparseState &state, size_t rail) {
    check_rail(state, rail);
    std::vector<SparseState::Term> out;
    out.reserve(state.size());
    for (const auto &[basis, amp] : state.terms()) {
        out.emplace_back(basis.with_delta(rail, +1), amp * std::sqrt((double)basis[rail] + 1));
    }
    return SparseState::from_terms(state.layout(), std::move(out), 0);
}

SparseState annihilate(const SparseState &state, size_t rail) {
    check_rail(state, rail);
    std::vector<SparseState::Term> out;
    out.reserve(state.size());
    for (const auto &[basis, amp] : state.terms()) {
        if (basis[rail] > 0) {
            out.emplace_back(basis.with_delta(rail, -1), amp * std::sqrt((double)basis[rail]));
        }
    }
    return SparseState::from_terms(state.layout(), std::move(out), 0);
}

SparseState apply_superposition(const SparseState &state, const ModeSuperposition &sup, bool adjoint, double tol) {
    if (sup.empty()) {
        throw std::invalid_argument("empty mode superposition");
    }
    for (const auto &[rail, coef] : sup.terms()) {
        check_rail(state, rail);
    }
    Accumulator acc;
    acc.reserve(state.size() * sup.terms().size());
    for (const auto &[basis, amp] : state.terms()) {
        for (const auto &[rail, coef] : sup.terms()) {
            double n = basis[rail];
            if (adjoint) {
                acc[basis.with_delta(rail, +1)] += amp * std::conj(coef) * std::sqrt(n + 1);
            } else if (n > 0) {
                acc[basis.with_delta(rail, -1)] += amp * coef * std::sqrt(n);
            }
        }
    }
    return finish(state.layout(), std::move(acc), tol);
}

ModeSuperposition tilde_superposition(const ModeLayout &layout, size_t spatial, size_t fourier_index) {
    size_t d = layout.internal_dim();
    if (fourier_index >= d) {
        throw std::out_of_range(
            "fourier index " + std::to_string(fourier_index) + " out of range for d=" + std::to_string(d));
    }
    std::vector<ModeSuperposition::Term> terms;
    double amp = 1 / std::sqrt((double)d);
    for (size_t s = 0; s < d; s++) {
        // Angle from (l*s) mod d.
        double angle = 2 * std::numbers::pi * (double)((fourier_index * s) % d) / (double)d;
        terms.emplace_back(layout.rail_of(spatial, s), std::polar(amp, angle));
    }
    return ModeSuperposition(std::move(terms));
}

Complex inner(const SparseState &a, const SparseState &b) {
    check_same_layout(a, b);
    Complex total = 0;
    auto ia = a.terms().begin();
    auto ib = b.terms().begin();
    while (ia != a.terms().end() && ib != b.terms().end()) {
        if (ia->first < ib->first) {
            ++ia;
        } else if (ib->first < ia->first) {
            ++ib;
        } else {
            total += std::conj(ia->second) * ib->second;
            ++ia;
            ++ib;
        }
    }
    return total;
}

SparseState prune(const SparseState &state, double tol) {
    if (tol < 0) {
        throw std::invalid_argument("prune tolerance must be non-negative");
    }
    return SparseState::from_terms(state.layout(), state.terms(), tol);
}

SparseState scale(const SparseState &state, Complex factor) {
    std::vector<SparseState::Term> out = state.terms();
    for (auto &[basis, amp] : out) {
        amp *= factor;
    }
    return SparseState::from_terms(state.layout(), std::move(out), 0);
}

SparseState add(const SparseState &a, const SparseState &b, Complex alpha, Complex beta) {
    check_same_layout(a, b);
    std::vector<SparseState::Term> out;
    out.reserve(a.size() + b.size());
    for (const auto &[basis, amp] : a.terms()) {
        out.emplace_back(basis, alpha * amp);
    }
    for (const auto &[basis, amp] : b.terms()) {
        out.emplace_back(basis, beta * amp);
    }
    return SparseState::from_terms(a.layout(), std::move(out), 0);
}

std::pair<SparseState, double> normalize(const SparseState &state) {
    double n = state.norm();
    if (state.is_zero() || n == 0) {
        throw std::invalid_argument("cannot normalize the zero state");
    }
    return {scale(state, 1 / n), n};
}

double max_abs_difference(const SparseState &a, const SparseState &b) {
    SparseState diff = add(a, b, 1, -1);
    double worst = 0;
    for (const auto &[basis, amp] : diff.terms()) {
        worst = std::max(worst, std::abs(amp));
    }
    return worst;
}

SparseState apply_mode_unitary(
    const SparseState &state, std::span<const size_t> rails, const Eigen::MatrixXcd &unitary, double tol) {
    size_t k = rails.size();
    if ((size_t)unitary.rows() != k || (size_t)unitary.cols() != k) {
        throw std::invalid_argument("unitary shape does not match rail count");
    }
    std::unordered_set<size_t> seen;
    for (size_t r : rails) {
        check_rail(state, r);
        if (!seen.insert(r).second) {
            throw std::invalid_argument("rail " + std::to_string(r) + " repeated in mode unitary");
        }
    }

    std::vector<double> factorial_sqrt(1, 1.0);
    auto sqrt_fact = [&](size_t n) {
        while (factorial_sqrt.size() <= n) {
            factorial_sqrt.push_back(factorial_sqrt.back() * std::sqrt((double)factorial_sqrt.size()));
        }
        return factorial_sqrt[n];
    };

    // Local input occupation -> list of (local output occupation, amplitude).
    using LocalTerms = std::vector<std::pair<std::vector<uint8_t>, Complex>>;
    std::map<std::vector<uint8_t>, LocalTerms> cache;
    auto expand = [&](const std::vector<uint8_t> &local_in) -> const LocalTerms & {
        auto it = cache.find(local_in);
        if (it != cache.end()) {
            return it->second;
        }
        // Multiply out prod_r (sum_m U(m,r) b_m^dagger)^{n_r} as a polynomial in the b_m^dagger.
        std::map<std::vector<uint8_t>, Complex> poly{{std::vector<uint8_t>(k, 0), 1.0}};
        double in_norm = 1;
        for (size_t r = 0; r < k; r++) {
            in_norm *= sqrt_fact(local_in[r]);
            for (size_t photon = 0; photon < local_in[r]; photon++) {
                std::map<std::vector<uint8_t>, Complex> next;
                for (const auto &[mono, coef] : poly) {
                    for (size_t m = 0; m < k; m++) {
                        Complex u = unitary((Eigen::Index)m, (Eigen::Index)r);
                        if (u == Complex(0)) {
                            continue;
                        }
                        auto bumped = mono;
                        bumped[m]++;
                        next[bumped] += coef * u;
                    }
                }
                poly = std::move(next);
            }
        }
        LocalTerms terms;
        for (const auto &[mono, coef] : poly) {
            double out_norm = 1;
            for (uint8_t n : mono) {
                out_norm *= sqrt_fact(n);
            }
            Complex amp = coef * out_norm / in_norm;
            if (amp != Complex(0)) {
                terms.emplace_back(mono, amp);
            }
        }
        return cache.emplace(local_in, std::move(terms)).first->second;
    };

    Accumulator acc;
    acc.reserve(state.size() * 2);
    std::vector<uint8_t> local(k);
    for (const auto &[basis, amp] : state.terms()) {
        for (size_t r = 0; r < k; r++) {
            local[r] = basis[rails[r]];
        }
        const LocalTerms &outs = expand(local);
        std::vector<uint8_t> occ = basis.occupations();
        for (const auto &[mono, coef] : outs) {
            for (size_t m = 0; m < k; m++) {
                occ[rails[m]] = mono[m];
            }
            acc[FockBasisState(occ)] += amp * coef;
        }
    }
    return finish(state.layout(), std::move(acc), tol);
}

SparseState filter(const SparseState &state, const std::function<bool(const FockBasisState &)> &keep) {
    std::vector<SparseState::Term> out;
    for (const auto &term : state.terms()) {
        if (keep(term.first)) {
            out.push_back(term);
        }
    }
    return SparseState::from_terms(state.layout(), std::move(out), 0);
}

}  // namespace sculpt
