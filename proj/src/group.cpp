#include "tsurf/group.hpp"

#include <algorithm>
#include <stdexcept>

namespace tsurf {

namespace {

char letter_char(Letter l) {
    switch (l) {
        case Letter::A: return 'A';
        case Letter::B: return 'B';
        case Letter::C: return 'C';
        case Letter::NegI: return '-';
    }
    return '?';
}

}  // namespace

GroupWord parse_word(std::string_view s) {
    GroupWord w;
    for (char ch : s) {
        switch (ch) {
            case 'A': w.letters.push_back(Letter::A); break;
            case 'B': w.letters.push_back(Letter::B); break;
            case 'C': w.letters.push_back(Letter::C); break;
            case 'D':  // D = BA
                w.letters.push_back(Letter::B);
                w.letters.push_back(Letter::A);
                break;
            case 'E':  // E = -CB
                w.letters.push_back(Letter::NegI);
                w.letters.push_back(Letter::C);
                w.letters.push_back(Letter::B);
                break;
            case '-': w.letters.push_back(Letter::NegI); break;
            case 'I':
            case ' ':
                break;
            default:
                throw std::domain_error(std::string("word: unknown letter '") + ch + "'");
        }
    }
    return w;
}

std::string word_str(const GroupWord& w) {
    if (w.letters.empty()) return "I";
    std::string s;
    s.reserve(w.letters.size());
    for (Letter l : w.letters) s.push_back(letter_char(l));
    return s;
}

GroupWord freely_reduce(const GroupWord& w) {
    int central = 0;
    std::vector<Letter> core;
    for (Letter l : w.letters) {
        if (l == Letter::NegI) {
            central ^= 1;
        } else if (!core.empty() && core.back() == l) {
            core.pop_back();
        } else {
            core.push_back(l);
        }
    }
    GroupWord out;
    if (central) out.letters.push_back(Letter::NegI);
    out.letters.insert(out.letters.end(), core.begin(), core.end());
    return out;
}

GroupWord concat(GroupWord a, const GroupWord& b) {
    a.letters.insert(a.letters.end(), b.letters.begin(), b.letters.end());
    return a;
}

Mat2 generator_matrix(Letter l, const Rational& c) {
    switch (l) {
        case Letter::A: return {-1, 0, 0, 1};
        case Letter::B: return {-1, 2, 0, 1};
        case Letter::C: return {-c, c - 1, -(c + 1), c};
        case Letter::NegI: return {-1, 0, 0, -1};
    }
    throw std::logic_error("generator_matrix: bad letter");
}

ConcreteMatrix realize(const GroupWord& w, const Rational& c) {
    if (c < Rational(1)) throw std::domain_error("realize: parameter must be >= 1");
    Mat2 m = Mat2::identity();
    for (Letter l : w.letters) m = m * generator_matrix(l, c);
    return {w, c, m};
}

GeneratorSet standard_generators(const Rational& c) {
    return {generator_matrix(Letter::A, c), generator_matrix(Letter::B, c),
            generator_matrix(Letter::C, c), generator_matrix(Letter::NegI, c)};
}

std::vector<RelationCheck> verify_relations(const GeneratorSet& g, const Rational& c) {
    const Mat2 id = Mat2::identity();
    Mat2 d_def{1, 2, 0, 1};
    Mat2 e_def{-c, c + 1, -(c + 1), c + 2};
    std::vector<RelationCheck> out;
    out.push_back({"A^2=I", g.A * g.A == id});
    out.push_back({"B^2=I", g.B * g.B == id});
    out.push_back({"C^2=I", g.C * g.C == id});
    out.push_back({"(-I)^2=I", g.NegI * g.NegI == id});
    out.push_back({"D=BA", g.B * g.A == d_def});
    out.push_back({"E=(-I)CB", g.NegI * (g.C * g.B) == e_def});
    return out;
}

std::vector<RelationCheck> verify_relations(const Rational& c) {
    return verify_relations(standard_generators(c), c);
}

ParabolicCertificate verify_parabolic(const Surface& h, DirectionKind direction,
                                      const Rational& m, long window) {
    if (m.sign() == 0) throw std::domain_error("verify_parabolic: shear amount must be nonzero");
    if (window < 1) throw std::domain_error("verify_parabolic: window must be >= 1");

    Mat2 derivative{1, m, 0, 1};
    if (direction == DirectionKind::SlopeOne) {
        // Conjugate the shear into the slope-one frame using the rational
        // basis (1,1), (-1,1) instead of an irrational rotation.
        Mat2 basis{1, -1, 1, 1};
        derivative = basis * Mat2{1, m, 0, 1} * basis.inverse();
    }

    ParabolicCertificate cert{true, derivative, {}};
    for (const Cylinder& cyl : h.cylinders(direction, window)) {
        cert.moduli.push_back(cyl.modulus);
        if (!(m * cyl.modulus).is_integer()) cert.certified = false;
    }
    return cert;
}

std::string direction_class_str(DirectionClass d) {
    switch (d) {
        case DirectionClass::HorizontalLike: return "horizontal-like";
        case DirectionClass::SlopeOneLike: return "slope-one-like";
        case DirectionClass::VerticalLike: return "vertical-like";
    }
    return "?";
}

namespace {

// Primitive representative with the first nonzero coordinate positive.
std::pair<mpz_class, mpz_class> primitive_form(const mpz_class& p, const mpz_class& q) {
    if (p == 0 && q == 0) throw std::domain_error("direction: zero vector");
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    mpz_class pp = p / g, qq = q / g;
    if (pp < 0 || (pp == 0 && qq < 0)) {
        pp = -pp;
        qq = -qq;
    }
    return {pp, qq};
}

}  // namespace

DirectionClass classify_direction(const mpz_class& p, const mpz_class& q) {
    auto [pp, qq] = primitive_form(p, q);
    bool podd = mpz_odd_p(pp.get_mpz_t()) != 0;
    bool qodd = mpz_odd_p(qq.get_mpz_t()) != 0;
    if (podd && !qodd) return DirectionClass::HorizontalLike;
    if (podd && qodd) return DirectionClass::SlopeOneLike;
    return DirectionClass::VerticalLike;
}

ReducedDirection reduce_direction(const mpz_class& p, const mpz_class& q) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    if (g != 1) throw std::domain_error("reduce_direction: input must be primitive");

    // Greedy Euclidean descent on |p|+|q| using the two parameter-1 twists
    // [[1,2],[0,1]] (shrinks p when |p|>|q|) and [[1,0],[2,1]] (shrinks q when
    // |q|>|p|). Each applied twist contributes its inverse's letters to the
    // output word, so realize(word,1) carries the base back to +-(p,q).
    const GroupWord inv_D = parse_word("AB");   // (BA)^-1
    const GroupWord inv_Dinv = parse_word("BA");
    const GroupWord inv_F = parse_word("AC");   // (CA)^-1
    const GroupWord inv_Finv = parse_word("CA");

    mpz_class x = p, y = q;
    GroupWord word;
    while (true) {
        mpz_class ax = abs(x), ay = abs(y);
        if (ay == 0 || ax == 0 || ax == ay) break;
        if (ax > ay) {
            if ((x > 0) == (y > 0)) {  // x <- x - 2y, undone by D
                x -= 2 * y;
                word = concat(std::move(word), inv_Dinv);
            } else {  // x <- x + 2y, undone by D^-1
                x += 2 * y;
                word = concat(std::move(word), inv_D);
            }
        } else {
            if ((x > 0) == (y > 0)) {  // y <- y - 2x, undone by F
                y -= 2 * x;
                word = concat(std::move(word), inv_Finv);
            } else {  // y <- y + 2x, undone by F^-1
                y += 2 * x;
                word = concat(std::move(word), inv_F);
            }
        }
    }

    Vec2 base;
    if (y == 0) {
        base = {1, 0};
    } else if (x == 0) {
        base = {0, 1};
    } else if (x == y) {
        base = {1, 1};
    } else {  // x == -y: one extra reflection maps (1,1) onto this ray
        base = {1, 1};
        word.letters.push_back(Letter::A);
    }
    word = freely_reduce(word);

    Vec2 image = realize(word, 1).matrix * base;
    Vec2 target{Rational(mpz_class(p)), Rational(mpz_class(q))};
    if (image != target && image != -target)
        throw std::logic_error("reduce_direction: descent failed to round-trip");
    return {std::move(word), base};
}

std::pair<Vec2, Vec2> phi_pair(const GroupWord& w, const Vec2& base, const Rational& c) {
    if (!(c > Rational(1))) throw std::domain_error("phi_pair: parameter must exceed 1");
    if (!(base == Vec2{1, 0} || base == Vec2{1, 1}))
        throw std::domain_error("phi_pair: base must be (1,0) or (1,1)");
    return {realize(w, c).matrix * base, realize(w, 1).matrix * base};
}

Vec2 automorphism_on_holonomy(const GroupWord& w, const Rational& c, const Vec2& v) {
    return realize(w, c).matrix * v;
}

}  // namespace tsurf
