#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tsurf/linear.hpp"
#include "tsurf/surface.hpp"

namespace tsurf {

// Involutive alphabet of the symmetry group presentation
// < A, B, C, -I | A^2 = B^2 = C^2 = I >, with -I central.
enum class Letter : std::uint8_t { A, B, C, NegI };

// A word acts by the left-to-right product of its letter matrices.
struct GroupWord {
    std::vector<Letter> letters;

    bool empty() const { return letters.empty(); }
    friend bool operator==(const GroupWord&, const GroupWord&) = default;
};

// Accepts strings over {A,B,C,D,E,-,I} plus spaces; D and E expand to their
// defining words BA and -CB, '-' is the central involution, 'I' is a no-op.
GroupWord parse_word(std::string_view s);
std::string word_str(const GroupWord& w);

// Cancels adjacent equal involution letters and moves the central involution
// to the front (kept only when its total count is odd).
GroupWord freely_reduce(const GroupWord& w);
GroupWord concat(GroupWord a, const GroupWord& b);

// Generator matrices at parameter c; A and B do not depend on c.
Mat2 generator_matrix(Letter l, const Rational& c);

struct ConcreteMatrix {
    GroupWord word;
    Rational c;
    Mat2 matrix;
};

ConcreteMatrix realize(const GroupWord& w, const Rational& c);

// Relation report, with an injectable generator table so corrupted generators
// can serve as a negative control.
struct GeneratorSet {
    Mat2 A, B, C, NegI;
};
GeneratorSet standard_generators(const Rational& c);

struct RelationCheck {
    std::string name;
    bool pass;
};
std::vector<RelationCheck> verify_relations(const GeneratorSet& g, const Rational& c);
std::vector<RelationCheck> verify_relations(const Rational& c);

// Certifies that the shear by m along the given family of parallel cylinders
// is a power of a single Dehn twist: m times every inspected modulus must be
// an integer. The derivative is returned whether or not certification holds.
struct ParabolicCertificate {
    bool certified;
    Mat2 derivative;
    std::vector<Rational> moduli;  // moduli of cylinders 1..window
};
ParabolicCertificate verify_parabolic(const Surface& h, DirectionKind direction,
                                      const Rational& m, long window);

// Parity class of a primitive integer direction. VerticalLike directions are
// exactly the ones carrying no saddle connection on the square-parameter
// surface.
enum class DirectionClass : std::uint8_t { HorizontalLike, SlopeOneLike, VerticalLike };

std::string direction_class_str(DirectionClass d);

// Reduces (p,q) by its gcd and sign before reading off the parity class.
// Rejects (0,0).
DirectionClass classify_direction(const mpz_class& p, const mpz_class& q);

// Word sending a base direction (1,0), (1,1) or (0,1) to +-v at parameter 1.
// Requires primitive input; the base has the same parity class as v.
struct ReducedDirection {
    GroupWord word;
    Vec2 base;
};
ReducedDirection reduce_direction(const mpz_class& p, const mpz_class& q);

// The pair (realize(w,c)*base, realize(w,1)*base); these span the computable
// restriction of the ray map between the two parameter values. base must be
// (1,0) or (1,1) and c must exceed 1.
std::pair<Vec2, Vec2> phi_pair(const GroupWord& w, const Vec2& base, const Rational& c);

// Derivative action on holonomy vectors.
Vec2 automorphism_on_holonomy(const GroupWord& w, const Rational& c, const Vec2& v);

}  // namespace tsurf
