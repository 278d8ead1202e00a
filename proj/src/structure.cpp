/*
   Copyright 2026 the liecoh authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "liecoh/structure.hpp"

#include <algorithm>
#include <stdexcept>

namespace liecoh {

namespace {

/* Restrict the action to the span of the columns of z (which must be
 * invariant); returns the representation on the subspace in the basis z. */
LieRep restrict_to(const LieRep& rep, const Mat& z) {
    std::vector<Mat> action;
    for (int i = 0; i <= rep.d(); ++i) {
        auto b = solve_in_column_span(z, rep.action(i) * z);
        if (!b) throw std::logic_error("restrict_to: subspace is not invariant");
        action.push_back(std::move(*b));
    }
    return LieRep(rep.d(), std::move(action));
}

}  // namespace

LengthVector length(const LieRep& rep) {
    return {factor_rationals(char_poly(rep.action(0))).factors};
}

BlockSplit z_split(const LieRep& rep) {
    std::size_t n = rep.dim();
    Poly chi = char_poly(rep.action(0));
    Poly zpoly = Poly::constant(1);
    for (const auto& [root, mult] : integer_roots(chi))
        zpoly = zpoly * poly_pow(Poly::x_minus(Rat(root)), mult);
    Poly zprime_poly = poly_divrem(chi, zpoly).quot;

    // integer part: generalized eigenspaces, eigenvalues ascending
    Mat zbasis(n, 0);
    for (const auto& [root, mult] : integer_roots(chi)) {
        Mat shifted = rep.action(0) - Mat::identity(n) * Rat(root);
        zbasis = hstack(zbasis, rank_kernel(shifted.pow(mult)).kernel);
    }
    Mat zprime_basis = rank_kernel(mat_apply(zprime_poly, rep.action(0))).kernel;

    LieRep zrep = restrict_to(rep, zbasis);
    LieRep zprime_rep = restrict_to(rep, zprime_basis);
    BlockSplit split{zrep, zprime_rep,
                     RepMorphism{zrep, rep, zbasis},
                     RepMorphism{zprime_rep, rep, zprime_basis}};
    if (split.z_part.dim() + split.zprime_part.dim() != n)
        throw std::logic_error("z_split: dimensions do not add up");
    return split;
}

UnipotentStructure unipotent_structure(const LieRep& rep) {
    std::size_t n = rep.dim();
    Poly chi = char_poly(rep.action(0));
    if (!(chi == Poly::x_power(static_cast<int>(n))))
        throw std::invalid_argument("not supported on Z*0");

    bool geom_zero = true;
    for (int j = 1; j <= rep.d(); ++j)
        if (!rep.action(j).is_zero()) geom_zero = false;
    if (!geom_zero)
        throw std::invalid_argument(
            "unipotent_structure: nonzero geometric action contradicts the bracket relations");

    const Mat& nil = rep.action(0);
    // nilpotency index and kernel filtration
    int index = 0;
    std::vector<Mat> kernels{Mat(n, 0)};  // ker N^0 = 0
    Mat power = Mat::identity(n);
    while (rank(power) > 0) {
        power = power * nil;
        ++index;
        kernels.push_back(rank_kernel(power).kernel);
        if (index > static_cast<int>(n)) throw std::logic_error("matrix is not nilpotent");
    }

    // Jordan chains: walk the filtration top down, starting new chains on
    // vectors independent of ker N^{k-1} plus the images of taller chains.
    struct Chain {
        std::vector<Rat> top;
        int height;
    };
    std::vector<Chain> chains;
    for (int k = index; k >= 1; --k) {
        Mat base = kernels[k - 1];
        for (const Chain& ch : chains) {
            Mat img(n, 1);
            img.set_col(0, ch.top);
            base = hstack(base, nil.pow(ch.height - k) * img);
        }
        SpanExtension ext = extend_column_span(base, kernels[k]);
        for (std::size_t j = 0; j < ext.reduced.cols(); ++j)
            chains.push_back({ext.reduced.col(j), k});
    }
    std::stable_sort(chains.begin(), chains.end(),
                     [](const Chain& a, const Chain& b) { return a.height > b.height; });

    std::vector<int> block_sizes;
    Mat witness(n, n);
    std::size_t col = 0;
    LieRep canonical = zero_rep(rep.d());
    for (const Chain& ch : chains) {
        block_sizes.push_back(ch.height);
        canonical = direct_sum(canonical, standard_rep(rep.d(), Poly::x_power(ch.height)));
        Mat v(n, 1);
        v.set_col(0, ch.top);
        for (int step = 0; step < ch.height; ++step) {
            witness.set_col(col++, v.col(0));
            v = nil * v;
        }
    }
    UnipotentStructure out{std::move(block_sizes), canonical,
                           RepMorphism{canonical, rep, std::move(witness)}, geom_zero};
    if (!intertwines(out.witness) || !inverse(out.witness.matrix))
        throw std::logic_error("unipotent_structure: witness is not an isomorphism");
    return out;
}

IrreducibilityResult irreducible_test(const LieRep& rep) {
    std::size_t n = rep.dim();
    if (n == 0) return {false, Mat(0, 0)};

    bool geom_zero = true;
    for (int j = 1; j <= rep.d(); ++j)
        if (!rep.action(j).is_zero()) geom_zero = false;

    if (!geom_zero) {
        // the joint kernel of X_1..X_d is nonzero (commuting nilpotents),
        // invariant, and proper as soon as one X_j acts nonzero
        Mat stacked(0, n);
        for (int j = 1; j <= rep.d(); ++j) {
            Mat next(stacked.rows() + n, n);
            for (std::size_t i = 0; i < stacked.rows(); ++i)
                for (std::size_t c = 0; c < n; ++c) next.at(i, c) = stacked.at(i, c);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t c = 0; c < n; ++c)
                    next.at(stacked.rows() + i, c) = rep.action(j).at(i, c);
            stacked = std::move(next);
        }
        Mat joint = rank_kernel(stacked).kernel;
        if (joint.cols() == 0) throw std::logic_error("joint kernel is zero for a valid rep");
        return {false, joint};
    }

    Poly chi = char_poly(rep.action(0));
    auto factors = factor_rationals(chi).factors;
    if (factors.size() == 1 && factors[0].second == 1) return {true, Mat(n, 0)};

    // cyclic subspace generated by a kernel vector of the smallest factor
    const Poly& f = factors[0].first;
    Mat ker = rank_kernel(mat_apply(f, rep.action(0))).kernel;
    Mat v(n, 1);
    v.set_col(0, ker.col(0));
    Mat powers(n, 0);
    for (int k = 0; k < f.degree(); ++k) {
        powers = hstack(powers, v);
        v = rep.action(0) * v;
    }
    SpanExtension ext = extend_column_span(Mat(n, 0), powers);
    return {false, ext.reduced};
}

}  // namespace liecoh
