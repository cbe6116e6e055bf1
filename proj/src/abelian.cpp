#include "cpmackey/abelian.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace mackey {

FgAbGroup::FgAbGroup(std::size_t generatorCount, IntegerMatrix relations)
    : generators_(generatorCount), relations_(std::move(relations)) {
    if (relations_.rows() != generators_)
        throw PreconditionError("FgAbGroup: relation matrix must have one row per generator");
}

FgAbGroup FgAbGroup::cyclic(const Integer& n) {
    if (n == 0) return free(1);
    IntegerMatrix rel(1, 1);
    rel.at(0, 0) = n;
    return FgAbGroup(1, std::move(rel));
}

AbHom::AbHom(FgAbGroup source, FgAbGroup target, IntegerMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
    if (matrix_.rows() != target_.generatorCount() || matrix_.cols() != source_.generatorCount())
        throw PreconditionError("AbHom: matrix dimensions incompatible with source/target");
}

bool samePresentation(const FgAbGroup& a, const FgAbGroup& b) {
    return a == b;
}

AbHom makeAbHom(const FgAbGroup& source, const FgAbGroup& target, IntegerMatrix m) {
    AbHom f(source, target, std::move(m));
    IntegerMatrix image = f.matrix() * source.relations();
    ColumnSolver solver(target.relations());
    for (std::size_t j = 0; j < image.cols(); ++j) {
        if (!solver.contains(image.column(j))) {
            std::ostringstream os;
            os << "makeAbHom: ill-defined map, image of relation column " << j
               << " is not in the target relation span";
            throw ValidationError(os.str());
        }
    }
    return f;
}

AbHom identityAbHom(const FgAbGroup& g) {
    return AbHom(g, g, IntegerMatrix::identity(g.generatorCount()));
}

AbHom zeroAbHom(const FgAbGroup& source, const FgAbGroup& target) {
    return AbHom(source, target, IntegerMatrix(target.generatorCount(), source.generatorCount()));
}

AbHom composeAb(const AbHom& g, const AbHom& f) {
    if (!samePresentation(f.target(), g.source()))
        throw PreconditionError("composeAb: middle groups do not match");
    return AbHom(f.source(), g.target(), g.matrix() * f.matrix());
}

AbHom addAbHom(const AbHom& f, const AbHom& g) {
    if (!samePresentation(f.source(), g.source()) || !samePresentation(f.target(), g.target()))
        throw PreconditionError("addAbHom: source/target mismatch");
    return AbHom(f.source(), f.target(), f.matrix() + g.matrix());
}

AbHom scaleAbHom(const Integer& c, const AbHom& f) {
    return AbHom(f.source(), f.target(), f.matrix().scaled(c));
}

AbHom powerAbHom(const AbHom& f, unsigned exponent) {
    if (!samePresentation(f.source(), f.target()))
        throw PreconditionError("powerAbHom: endomorphism required");
    return AbHom(f.source(), f.target(), f.matrix().power(exponent));
}

bool equalAbHom(const AbHom& f, const AbHom& g) {
    if (!samePresentation(f.source(), g.source()) || !samePresentation(f.target(), g.target()))
        return false;
    IntegerMatrix diff = f.matrix() - g.matrix();
    if (diff.isZero()) return true;
    ColumnSolver solver(f.target().relations());
    for (std::size_t j = 0; j < diff.cols(); ++j)
        if (!solver.contains(diff.column(j))) return false;
    return true;
}

bool isZeroAbHom(const AbHom& f) {
    return equalAbHom(f, zeroAbHom(f.source(), f.target()));
}

bool sameElement(const FgAbGroup& g, const std::vector<Integer>& x, const std::vector<Integer>& y) {
    if (x.size() != g.generatorCount() || y.size() != g.generatorCount())
        throw PreconditionError("sameElement: vector length mismatch");
    std::vector<Integer> diff(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) diff[i] = x[i] - y[i];
    return solveColumn(g.relations(), diff).has_value();
}

bool isTrivial(const FgAbGroup& g) {
    if (g.generatorCount() == 0) return true;
    ColumnSolver solver(g.relations());
    std::vector<Integer> e(g.generatorCount());
    for (std::size_t i = 0; i < g.generatorCount(); ++i) {
        e[i] = 1;
        if (!solver.contains(e)) return false;
        e[i] = 0;
    }
    return true;
}

KernelAb kernelAb(const AbHom& f) {
    // Generators of { x : f(x) in span(target relations) } are the x-parts of
    // the nullspace of [f.matrix | target.relations]; relations among them
    // express membership in the source relation span.
    const std::size_t s = f.source().generatorCount();
    IntegerMatrix block = IntegerMatrix::hconcat(f.matrix(), f.target().relations());
    IntegerMatrix null = nullspaceBasis(block);
    std::vector<std::size_t> topRows(s);
    for (std::size_t i = 0; i < s; ++i) topRows[i] = i;
    IntegerMatrix gens = null.selectRows(topRows);  // s x k

    IntegerMatrix relBlock = IntegerMatrix::hconcat(gens, f.source().relations());
    IntegerMatrix relNull = nullspaceBasis(relBlock);
    std::vector<std::size_t> kRows(gens.cols());
    for (std::size_t i = 0; i < gens.cols(); ++i) kRows[i] = i;
    IntegerMatrix relations = relNull.selectRows(kRows);

    FgAbGroup kernel(gens.cols(), std::move(relations));
    AbHom inclusion = makeAbHom(kernel, f.source(), std::move(gens));
    return KernelAb{std::move(kernel), std::move(inclusion)};
}

CokernelAb cokernelAb(const AbHom& f) {
    FgAbGroup coker(f.target().generatorCount(),
                    IntegerMatrix::hconcat(f.target().relations(), f.matrix()));
    AbHom projection(f.target(), coker, IntegerMatrix::identity(f.target().generatorCount()));
    return CokernelAb{std::move(coker), std::move(projection)};
}

FgAbGroup directSumAb(const FgAbGroup& g, const FgAbGroup& h) {
    return FgAbGroup(g.generatorCount() + h.generatorCount(),
                     IntegerMatrix::blockDiagonal(g.relations(), h.relations()));
}

FgAbGroup directSumAbList(const std::vector<FgAbGroup>& parts) {
    FgAbGroup out = FgAbGroup::trivial();
    for (const FgAbGroup& p : parts) out = directSumAb(out, p);
    return out;
}

AbHom injectionAb(const std::vector<FgAbGroup>& parts, std::size_t which) {
    FgAbGroup sum = directSumAbList(parts);
    IntegerMatrix m(sum.generatorCount(), parts[which].generatorCount());
    std::size_t offset = 0;
    for (std::size_t k = 0; k < which; ++k) offset += parts[k].generatorCount();
    for (std::size_t j = 0; j < parts[which].generatorCount(); ++j) m.at(offset + j, j) = 1;
    return AbHom(parts[which], sum, std::move(m));
}

AbHom projectionAb(const std::vector<FgAbGroup>& parts, std::size_t which) {
    FgAbGroup sum = directSumAbList(parts);
    IntegerMatrix m(parts[which].generatorCount(), sum.generatorCount());
    std::size_t offset = 0;
    for (std::size_t k = 0; k < which; ++k) offset += parts[k].generatorCount();
    for (std::size_t j = 0; j < parts[which].generatorCount(); ++j) m.at(j, offset + j) = 1;
    return AbHom(sum, parts[which], std::move(m));
}

FgAbGroup tensorAb(const FgAbGroup& g, const FgAbGroup& h) {
    IntegerMatrix relations = IntegerMatrix::hconcat(
        IntegerMatrix::kronecker(g.relations(), IntegerMatrix::identity(h.generatorCount())),
        IntegerMatrix::kronecker(IntegerMatrix::identity(g.generatorCount()), h.relations()));
    return FgAbGroup(g.generatorCount() * h.generatorCount(), std::move(relations));
}

AbHom tensorHom(const AbHom& f1, const AbHom& f2) {
    return AbHom(tensorAb(f1.source(), f2.source()), tensorAb(f1.target(), f2.target()),
                 IntegerMatrix::kronecker(f1.matrix(), f2.matrix()));
}

namespace {

// Diagonal orders of the minimal presentation: d >= 2 for torsion generators
// (in divisibility order) followed by 0 per free generator.
std::vector<Integer> presentationOrders(const MinimalPresentation& mp) {
    std::vector<Integer> orders(mp.group.generatorCount(), Integer(0));
    const IntegerMatrix& rel = mp.group.relations();
    for (std::size_t j = 0; j < rel.cols(); ++j)
        for (std::size_t i = 0; i < rel.rows(); ++i)
            if (rel.at(i, j) != 0) orders[i] = rel.at(i, j);
    return orders;
}

}  // namespace

MinimalPresentation minimalPresentationAb(const FgAbGroup& g) {
    SmithTransforms s = smithTransforms(g.relations());
    const std::size_t n = g.generatorCount();
    const std::size_t lim = std::min(n, g.relations().cols());

    std::vector<std::size_t> torsion, freeGens;
    for (std::size_t i = 0; i < n; ++i) {
        Integer d = (i < lim) ? s.D.at(i, i) : Integer(0);
        if (d == 1) continue;  // generator killed by a unit relation
        if (d == 0)
            freeGens.push_back(i);
        else
            torsion.push_back(i);
    }
    std::vector<std::size_t> kept = torsion;
    kept.insert(kept.end(), freeGens.begin(), freeGens.end());

    IntegerMatrix relations(kept.size(), torsion.size());
    for (std::size_t k = 0; k < torsion.size(); ++k) relations.at(k, k) = s.D.at(torsion[k], torsion[k]);

    FgAbGroup minimal(kept.size(), std::move(relations));
    IntegerMatrix toMat = s.U.selectRows(kept);
    IntegerMatrix fromMat = s.Uinv.selectColumns(kept);
    AbHom to = makeAbHom(g, minimal, std::move(toMat));
    AbHom from = makeAbHom(minimal, g, std::move(fromMat));
    return MinimalPresentation{std::move(minimal), std::move(to), std::move(from)};
}

std::vector<Integer> InvariantFactors::flattened() const {
    std::vector<Integer> out = torsion;
    out.insert(out.end(), freeRank, Integer(0));
    return out;
}

std::string InvariantFactors::toString() const {
    std::vector<Integer> flat = flattened();
    if (flat.empty()) return "-";
    std::ostringstream os;
    for (std::size_t i = 0; i < flat.size(); ++i) {
        if (i > 0) os << ",";
        os << flat[i];
    }
    return os.str();
}

InvariantFactors invariantFactors(const FgAbGroup& g) {
    SmithTransforms s = smithTransforms(g.relations());
    InvariantFactors out;
    const std::size_t lim = std::min(g.generatorCount(), g.relations().cols());
    std::size_t killed = 0;
    for (std::size_t i = 0; i < lim; ++i) {
        const Integer& d = s.D.at(i, i);
        if (d == 0) break;
        ++killed;
        if (d >= 2) out.torsion.push_back(d);
    }
    out.freeRank = g.generatorCount() - killed;
    return out;
}

AbHom liftThroughAb(const AbHom& f, const AbHom& incl) {
    if (!samePresentation(f.target(), incl.target()))
        throw PreconditionError("liftThroughAb: targets do not match");
    // Solve incl(x) = f(e_j) modulo the target relations, column by column.
    IntegerMatrix block = IntegerMatrix::hconcat(incl.matrix(), incl.target().relations());
    ColumnSolver solver(block);
    IntegerMatrix lifted(incl.source().generatorCount(), f.source().generatorCount());
    for (std::size_t j = 0; j < f.matrix().cols(); ++j) {
        auto x = solver.solve(f.matrix().column(j));
        if (!x) {
            std::ostringstream os;
            os << "liftThroughAb: generator " << j << " does not lift through the inclusion";
            throw ValidationError(os.str());
        }
        for (std::size_t i = 0; i < lifted.rows(); ++i) lifted.at(i, j) = (*x)[i];
    }
    return makeAbHom(f.source(), incl.source(), std::move(lifted));
}

HomGroupAb::HomGroupAb(const FgAbGroup& g, const FgAbGroup& h)
    : source_(g),
      target_(h),
      mpSource_(minimalPresentationAb(g)),
      mpTarget_(minimalPresentationAb(h)),
      sourceOrders_(presentationOrders(mpSource_)),
      targetOrders_(presentationOrders(mpTarget_)) {
    for (std::size_t i = 0; i < sourceOrders_.size(); ++i) {
        for (std::size_t j = 0; j < targetOrders_.size(); ++j) {
            const Integer& a = sourceOrders_[i];
            const Integer& b = targetOrders_[j];
            if (b == 0) {
                if (a != 0) continue;  // torsion into free is zero
                pairs_.push_back(Pair{i, j, 0, 1});
            } else if (a == 0) {
                pairs_.push_back(Pair{i, j, b, 1});
            } else {
                Integer c = gcd(a, b);
                if (c == 1) continue;
                pairs_.push_back(Pair{i, j, c, b / c});
            }
        }
    }
    IntegerMatrix relations(pairs_.size(), 0);
    for (std::size_t k = 0; k < pairs_.size(); ++k) {
        if (pairs_[k].modulus == 0) continue;
        IntegerMatrix col(pairs_.size(), 1);
        col.at(k, 0) = pairs_[k].modulus;
        relations = IntegerMatrix::hconcat(relations, col);
    }
    group_ = FgAbGroup(pairs_.size(), std::move(relations));
}

AbHom HomGroupAb::elementToHom(const std::vector<Integer>& element) const {
    if (element.size() != pairs_.size())
        throw PreconditionError("HomGroupAb::elementToHom: element length mismatch");
    IntegerMatrix onMinimal(mpTarget_.group.generatorCount(), mpSource_.group.generatorCount());
    for (std::size_t k = 0; k < pairs_.size(); ++k)
        onMinimal.at(pairs_[k].j, pairs_[k].i) += element[k] * pairs_[k].multiplier;
    IntegerMatrix m = mpTarget_.from.matrix() * onMinimal * mpSource_.to.matrix();
    return makeAbHom(source_, target_, std::move(m));
}

std::vector<Integer> HomGroupAb::homToElement(const AbHom& f) const {
    if (!samePresentation(f.source(), source_) || !samePresentation(f.target(), target_))
        throw PreconditionError("HomGroupAb::homToElement: hom has wrong source/target");
    IntegerMatrix onMinimal = mpTarget_.to.matrix() * f.matrix() * mpSource_.from.matrix();
    std::vector<Integer> element(pairs_.size());
    for (std::size_t k = 0; k < pairs_.size(); ++k) {
        const Integer& raw = onMinimal.at(pairs_[k].j, pairs_[k].i);
        if (raw % pairs_[k].multiplier != 0)
            throw ValidationError("HomGroupAb::homToElement: hom is not well defined");
        element[k] = raw / pairs_[k].multiplier;
    }
    return element;
}

}  // namespace mackey
