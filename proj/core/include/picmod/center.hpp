#pragma once

#include <vector>

#include "picmod/form.hpp"
#include "picmod/picard.hpp"

namespace picmod {

// The center form Q on A + A^ (orders list of A repeated twice):
//   Q(a, phi) = <phi, a> + q(a),
// with bilinear form B((a,phi),(a',phi')) = <phi',a> + <phi,a'> + sigma(a,a').
// Realized as an ordinary QuadraticForm whose cross block is the pairing.
struct CenterForm {
    QuadraticForm base;
    QuadraticForm doubled;
};

CenterForm center_form(const QuadraticForm& q);

// The two embeddings a -> (a, 0) and a -> (a, -sigma~(a)); the first is
// orthogonal from (A, q), the second from (A, -q), and the images are each
// other's orthogonal complements under Q.
struct CenterEmbeddings {
    GroupHom forward;   // A -> A + A^
    GroupHom reverse;   // A -> A + A^
    Subgroup forward_image;
    Subgroup reverse_image;
};

CenterEmbeddings embeddings(const QuadraticForm& q);

// alpha_f(a, phi) = (a + f(phi), phi - sigma~ f(phi)) as a hom on A + A^;
// it lies in O(A+A^, Q) and is bijective exactly when f is in P(A, q).
GroupHom alpha_f(const QuadraticForm& q, const GroupHom& f);

// All orthogonal automorphisms of (A+A^, Q) fixing A+0 pointwise, found by
// backtracking over the images of the A^-generators only (the A block is
// forced); equals { alpha_f : f in P(A,q) } as a set.
std::vector<GroupHom> enumerate_trivializable(const QuadraticForm& q, const SizeGuard& guard = {});

// A trivializable alpha preserves the reverse embedding's image; the induced
// map on A is returned and equals d(f) = id - f sigma~ when alpha = alpha_f.
GroupHom restrict_to_rev(const QuadraticForm& q, const GroupHom& alpha);

// g~ = (g, . o g^{-1}) on the double; checks g~ alpha_f g~^{-1} = alpha_{^g f}.
bool lift_conjugation_check(const QuadraticForm& q, const GroupHom& g, const PicardElement& f);

}  // namespace picmod
