#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cpmackey/integer_matrix.hpp"

namespace mackey {

/// Finitely generated abelian group presented as the cokernel of an integer
/// relation matrix: elements are integer vectors of length generatorCount,
/// taken modulo the column span of `relations`. The 0-generator group is the
/// trivial group. Presentations are never simplified implicitly; call
/// minimalPresentationAb for that.
class FgAbGroup {
public:
    FgAbGroup() : generators_(0), relations_(0, 0) {}
    FgAbGroup(std::size_t generatorCount, IntegerMatrix relations);

    static FgAbGroup free(std::size_t rank) { return FgAbGroup(rank, IntegerMatrix(rank, 0)); }
    static FgAbGroup trivial() { return free(0); }
    /// Z/n on one generator; n = 0 gives Z.
    static FgAbGroup cyclic(const Integer& n);

    std::size_t generatorCount() const { return generators_; }
    const IntegerMatrix& relations() const { return relations_; }

    bool operator==(const FgAbGroup&) const = default;

private:
    std::size_t generators_;
    IntegerMatrix relations_;
};

/// Homomorphism between presented groups, recorded by a matrix on generators
/// (target.generatorCount x source.generatorCount). Two homs with the same
/// source and target are equal iff their matrix difference has every column in
/// the column span of the target relations.
class AbHom {
public:
    AbHom() = default;
    AbHom(FgAbGroup source, FgAbGroup target, IntegerMatrix matrix);

    const FgAbGroup& source() const { return source_; }
    const FgAbGroup& target() const { return target_; }
    const IntegerMatrix& matrix() const { return matrix_; }

    std::vector<Integer> apply(const std::vector<Integer>& x) const { return matrix_.applyTo(x); }

private:
    FgAbGroup source_, target_;
    IntegerMatrix matrix_;
};

bool samePresentation(const FgAbGroup& a, const FgAbGroup& b);

/// Validates well-definedness: every column of m * source.relations must lie
/// in the column span of target.relations. Throws ValidationError naming the
/// first offending relation column otherwise.
AbHom makeAbHom(const FgAbGroup& source, const FgAbGroup& target, IntegerMatrix m);

AbHom identityAbHom(const FgAbGroup& g);
AbHom zeroAbHom(const FgAbGroup& source, const FgAbGroup& target);
AbHom composeAb(const AbHom& g, const AbHom& f);
AbHom addAbHom(const AbHom& f, const AbHom& g);
AbHom scaleAbHom(const Integer& c, const AbHom& f);
AbHom powerAbHom(const AbHom& f, unsigned exponent);

bool equalAbHom(const AbHom& f, const AbHom& g);
bool isZeroAbHom(const AbHom& f);
bool sameElement(const FgAbGroup& g, const std::vector<Integer>& x, const std::vector<Integer>& y);
bool isTrivial(const FgAbGroup& g);

struct KernelAb {
    FgAbGroup group;
    AbHom inclusion;  // group -> f.source, monic, with f o inclusion = 0
};

struct CokernelAb {
    FgAbGroup group;
    AbHom projection;  // f.target -> group, epic, with projection o f = 0
};

KernelAb kernelAb(const AbHom& f);
CokernelAb cokernelAb(const AbHom& f);

FgAbGroup directSumAb(const FgAbGroup& g, const FgAbGroup& h);
FgAbGroup directSumAbList(const std::vector<FgAbGroup>& parts);
AbHom injectionAb(const std::vector<FgAbGroup>& parts, std::size_t which);
AbHom projectionAb(const std::vector<FgAbGroup>& parts, std::size_t which);

/// Tensor product with Kronecker generator ordering: generator (i, j) of
/// g (x) h sits at index i * h.generatorCount + j.
FgAbGroup tensorAb(const FgAbGroup& g, const FgAbGroup& h);
AbHom tensorHom(const AbHom& f1, const AbHom& f2);

/// Isomorphic presentation with relations diag(d1, ..., dk), each di >= 2,
/// followed by free generators. `to` and `from` are mutually inverse.
struct MinimalPresentation {
    FgAbGroup group;
    AbHom to;    // original -> minimal
    AbHom from;  // minimal -> original
};

MinimalPresentation minimalPresentationAb(const FgAbGroup& g);

/// Invariant factors: torsion entries (each >= 2, in divisibility order) and
/// the free rank. A complete isomorphism invariant.
struct InvariantFactors {
    std::vector<Integer> torsion;
    std::size_t freeRank = 0;

    bool operator==(const InvariantFactors&) const = default;
    /// Torsion factors followed by one 0 per free generator.
    std::vector<Integer> flattened() const;
    std::string toString() const;  // "2,4,0" ; "-" when trivial
};

InvariantFactors invariantFactors(const FgAbGroup& g);

/// Factors f through a monic inclusion: returns u with incl o u = f.
/// Every generator image of f must lie in the image of incl.
AbHom liftThroughAb(const AbHom& f, const AbHom& incl);

/// The group of homomorphisms g -> h, presented explicitly, with mutually
/// inverse translations between group elements and homs.
class HomGroupAb {
public:
    HomGroupAb(const FgAbGroup& g, const FgAbGroup& h);

    const FgAbGroup& group() const { return group_; }
    const FgAbGroup& source() const { return source_; }
    const FgAbGroup& target() const { return target_; }

    AbHom elementToHom(const std::vector<Integer>& element) const;
    std::vector<Integer> homToElement(const AbHom& f) const;

private:
    struct Pair {
        std::size_t i, j;   // generator indices in the minimal presentations
        Integer modulus;    // order of the cyclic summand; 0 = free
        Integer multiplier; // generator hom sends e_i to multiplier * e_j
    };

    FgAbGroup source_, target_;
    MinimalPresentation mpSource_, mpTarget_;
    std::vector<Integer> sourceOrders_, targetOrders_;
    std::vector<Pair> pairs_;
    FgAbGroup group_;
};

}  // namespace mackey
