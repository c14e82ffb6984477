#pragma once

#include "prinhall/rep.hpp"

namespace prinhall {

/// Theta(X) as a quotient of X: at i in I^- the image of the stacked map
/// X_i -> (+)_{j max, i <= j} X_j, at maximal j the space X_j itself.
struct ThetaImage {
    Rep source;
    Rep image;
    /// source -> image, a surjective homomorphism.
    Morphism projection;
    /// Vertexwise linear sections image_i -> source_i of the projection
    /// (not a homomorphism in general).
    Morphism section;
};

/// Throws ValidationError when x is not prinjective.
ThetaImage theta(const Rep& x);

/// Theta(f) for f : tx.source -> ty.source.
Morphism theta_hom(const ThetaImage& tx, const ThetaImage& ty, const Morphism& f);

/// dim {f in Hom(x, y) : Theta(f) = 0}, i.e. f vanishing at every maximal element.
std::size_t ker_theta_dim(const Rep& x, const Rep& y);

/// x = reduced (+) kernel_part, where every indecomposable summand of
/// kernel_part vanishes on max I and no summand of reduced does.
struct ThetaSplit {
    Rep reduced;
    Rep kernel_part;
};
ThetaSplit split_ker_theta(const Rep& x, std::uint64_t budget = kDefaultBudget);

} // namespace prinhall
