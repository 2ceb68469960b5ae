#pragma once

// Square presentation of the pushforward of the source local ring over the
// target: generators are the monomial basis of O_2 / Phi*(m_3) O_2, the
// relations among them modulo the graph ideal are found by module Groebner
// elimination and minimized to a square matrix lambda over (x,y,z) whose
// determinant is a unit multiple of a power of the image equation. Fitting
// ideals F_k are generated by the (m-k) x (m-k) minors. Multigerms get one
// block per branch, assembled block-diagonally.

#include "germlink/germ.hpp"

namespace germlink {

struct PresentationBlock {
    std::vector<Poly> gens;              // monomial basis, source ring
    std::vector<std::vector<Poly>> rows; // square block over the target ring
    Poly det;                            // block determinant
    Poly image;                          // monic branch image equation
    unsigned cover_degree = 0;           // det = unit * image^cover_degree
};

struct Presentation {
    Ring target;                           // x, y, z (renamed on a clash)
    std::vector<PresentationBlock> blocks; // one per branch
    size_t m = 0;                          // total matrix size
    std::vector<std::vector<Poly>> lambda; // assembled block diagonal
    Poly det;                              // det(lambda)
    Poly image;                            // monic product of branch images
};

// target variable names that avoid the source names
std::array<std::string, 3> target_names(const Ring& source);

// principal generator of the eliminated graph ideal, monic
Poly image_equation(const Branch& b, const Ring& target);

Presentation presentation_matrix(const MapGerm& g);

// ideal of (m-k) x (m-k) minors of lambda; the unit ideal when m <= k
Ideal fitting_ideal(const Presentation& P, unsigned k);

} // namespace germlink
