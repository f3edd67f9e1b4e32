#include "artifact/chordcat.hpp"
#include "printers.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace artifact;

namespace {

constexpr int C = 2;

std::shared_ptr<const Algebra> ft(int n) { return presentation(PresentationId::ft(n)); }
Series t(int n, int i, int j, int D = C) { return Series::gen(ft(n), D, GeneratorId::t(i, j)); }

Series random_slice(int w, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> c(-2, 2);
    Series lin(ft(w), C);
    for (const auto& g : ft(w)->generators()) lin += Series::gen(ft(w), C, g) * Rat(c(rng), 2);
    return Series::one(ft(w), C) + lin + lin * lin * Rat(c(rng));
}

// Hand evaluation of a width-3 snake: t_ij -> e_i e_j t11 with e = (+, -, +),
// extended multiplicatively into the commutative one-strand algebra.
Series snake_oracle(const Series& u) {
    const int e[] = {0, 1, -1, 1};
    Series out(ft(1), u.truncation());
    const auto& gens = u.algebra()->generators();
    for (const auto& [m, c] : u.terms()) {
        Rat sign = c;
        for (auto k : m.w) sign *= e[gens[k].i] * e[gens[k].j];
        out += series_pow(t(1, 1, 1, u.truncation()), m.degree()) * sign;
    }
    return out;
}

bool same_words(const ChordMorphism& a, const ChordMorphism& b) { return a.words == b.words; }

ChordMorphism nf(int w, std::vector<Layer> L) { return normalize(morphism_of(CObject::plus(w), std::move(L))); }

AssociatorCandidate associator(bool perturbed) {
    SolveOptions o;
    if (perturbed) o.kernel_choice[3] = {Rat(1)};
    auto s = solve_degreewise(SolveTarget::Assoc, 1, 4, o);
    return {1, s.phi, 4};
}

GrtElement grt_element(const Rat& c3, const Rat& lambda) {
    SolveOptions o;
    o.kernel_choice[3] = {c3};
    auto s = solve_degreewise(SolveTarget::GRT1, 1, 4, o);
    return grt_scale({1, s.phi, 4}, lambda);
}

// value of a normal form that is a single slice or the identity, at any width
Series slice_value(const ChordMorphism& m, int w) {
    if (m.words.size() != 1) throw std::runtime_error("not a single word");
    const auto& word = m.words[0];
    if (word.layers.empty()) return Series::one(ft(w), C) * word.coefficient;
    if (word.layers.size() != 1 || word.layers[0].kind != Layer::Kind::Slice)
        throw std::runtime_error("not a single slice");
    return *word.layers[0].value * word.coefficient;
}

}  // namespace

TEST(Objects, ShapesAndParsing) {
    EXPECT_EQ(CObject::plus(3).str(), "((+ +) +)");
    EXPECT_EQ(CObject::plus(0).str(), "empty");
    EXPECT_EQ(CObject::parse("((+ +) +)").width, 3);
    EXPECT_EQ(CObject::parse("empty").width, 0);
    EXPECT_THROW(CObject::parse("(+ x)"), Error);
}

TEST(Words, WidthChase) {
    EXPECT_EQ(chase_width(1, {Layer::cup(1), Layer::cap(2)}), 1);
    EXPECT_EQ(chase_width(0, {Layer::cup(1), Layer::cap(1)}), 0);
    EXPECT_EQ(chase_width(2, {Layer::cup(2)}), 4);
    EXPECT_THROW(chase_width(1, {Layer::cap(1)}), Error);
    EXPECT_THROW(chase_width(2, {Layer::slice(t(3, 1, 2))}), Error);
    EXPECT_THROW(chase_width(2, {Layer::permutation({1, 2, 3})}), Error);
}

TEST(Normalize, ZigZagsBothWays) {
    EXPECT_TRUE(same_words(nf(1, {Layer::cup(1), Layer::cap(2)}), normalize(identity(CObject::plus(1)))));
    EXPECT_TRUE(same_words(nf(1, {Layer::cup(2), Layer::cap(1)}), normalize(identity(CObject::plus(1)))));
    auto id = normalize(identity(CObject::plus(1)));
    ASSERT_EQ(id.words.size(), 1u);
    EXPECT_TRUE(id.words[0].layers.empty());
}

TEST(Normalize, ClosedLoopStays) {
    auto loop = compose(morphism_of(CObject::plus(2), {Layer::cap(1)}), morphism_of(CObject::plus(0), {Layer::cup(1)}));
    EXPECT_EQ(loop.source.width, 0);
    EXPECT_EQ(loop.target.width, 0);
    auto n = normalize(loop);
    ASSERT_EQ(n.words.size(), 1u);
    EXPECT_EQ(n.words[0].layers, (std::vector<Layer>{Layer::cup(1), Layer::cap(1)}));
}

TEST(Normalize, PermutationsCancelAndPushIntoSlices) {
    EXPECT_TRUE(same_words(nf(3, {Layer::permutation({2, 3, 1}), Layer::permutation({3, 1, 2})}),
                           normalize(identity(CObject::plus(3)))));
    auto u = Series::one(ft(2), C) + t(2, 1, 1);
    auto m = nf(2, {Layer::slice(u), Layer::permutation({2, 1})});
    ASSERT_EQ(m.words.size(), 1u);
    ASSERT_EQ(m.words[0].layers.size(), 2u);
    EXPECT_EQ(m.words[0].layers[0].kind, Layer::Kind::Perm);
    EXPECT_EQ(*m.words[0].layers[1].value, Series::one(ft(2), C) + t(2, 2, 2));
}

TEST(Normalize, SlicesMerge) {
    auto a = Series::one(ft(2), C) + t(2, 1, 2), b = Series::one(ft(2), C) + t(2, 1, 1);
    auto m = nf(2, {Layer::slice(a), Layer::slice(b)});
    EXPECT_EQ(one_strand_value(normalize(identity(CObject::plus(1))), C), Series::one(ft(1), C));
    ASSERT_EQ(m.words.size(), 1u);
    EXPECT_EQ(*m.words[0].layers[0].value, a * b);
    // a zero slice kills the word, a scalar slice folds into the coefficient
    EXPECT_TRUE(nf(2, {Layer::slice(Series(ft(2), C))}).is_zero());
    auto s = nf(2, {Layer::slice(Series::scalar(ft(2), C, 3))});
    ASSERT_EQ(s.words.size(), 1u);
    EXPECT_EQ(s.words[0].coefficient, 3);
    EXPECT_TRUE(s.words[0].layers.empty());
}

TEST(Normalize, SnakeMatchesHandEvaluation) {
    std::mt19937_64 rng(21);
    for (int k = 0; k < 10; ++k) {
        auto u = random_slice(3, rng);
        auto m = nf(1, {Layer::cup(1), Layer::slice(u), Layer::cap(2)});
        EXPECT_EQ(one_strand_value(m, C), snake_oracle(u));
        EXPECT_EQ(snake_projection(u), snake_oracle(u));
    }
    EXPECT_EQ(snake_oracle(t(3, 1, 2)), -t(1, 1, 1));
    EXPECT_EQ(snake_oracle(t(3, 1, 2) * t(3, 2, 3)), t(1, 1, 1) * t(1, 1, 1));
}

TEST(Normalize, BendOfTheChordIsItsCyclicImage) {
    // cup on the left, the chord on strands 2 and 3, cap on strands 3 and 4
    auto h = series_exp(t(2, 1, 2));
    auto m = nf(2, {Layer::cup(1), Layer::slice(embed_slice(h, 1, 4)), Layer::cap(3)});
    EXPECT_EQ(slice_value(m, 2).algebra()->descriptor(), "ft(2)");
    EXPECT_EQ(slice_value(m, 2), series_exp(-t(2, 1, 2) - t(2, 2, 2)));
}

TEST(Normalize, FourTermSliceVanishes) {
    auto fourT = bracket(t(3, 1, 2), t(3, 1, 3) + t(3, 2, 3));
    EXPECT_TRUE(nf(3, {Layer::slice(fourT)}).is_zero());
    auto notZero = bracket(t(3, 1, 2), t(3, 1, 3));
    EXPECT_FALSE(nf(3, {Layer::slice(notZero)}).is_zero());
}

TEST(Normalize, PrimitiveChordDiagramsInDegreeTwo) {
    // degree-2 Lie part of ft(3): brackets of generators span a single line
    std::vector<Series> br;
    const auto& gens = ft(3)->generators();
    for (std::size_t a = 0; a < gens.size(); ++a)
        for (std::size_t b = a + 1; b < gens.size(); ++b)
            br.push_back(bracket(Series::gen(ft(3), C, gens[a]), Series::gen(ft(3), C, gens[b])));
    std::map<Monomial, Col> cols;
    std::vector<SparseVec> rows;
    for (const auto& s : br) {
        std::vector<SparseVec::Entry> e;
        for (const auto& [m, c] : s.terms()) e.emplace_back(cols.emplace(m, static_cast<Col>(cols.size())).first->second, c);
        rows.push_back(SparseVec::from_entries(e));
    }
    EXPECT_EQ(echelonize(rows).rank(), 1u);
}

TEST(Normalize, ScheduleIndependence) {
    std::mt19937_64 rng(5);
    for (int k = 0; k < 8; ++k) {
        auto u = embed_slice(random_slice(2, rng), 1, 4);
        auto v = embed_slice(random_slice(1, rng), 2, 4);
        auto m = morphism_of(CObject::plus(2), {Layer::cup(1), Layer::slice(u), Layer::permutation({1, 3, 2, 4}),
                                                Layer::slice(v), Layer::cap(3)});
        m = m + Rat(1, 2) * morphism_of(CObject::plus(2), {Layer::cup(2), Layer::cap(1), Layer::slice(embed_slice(random_slice(1, rng), 0, 2))});
        auto n0 = normalize(m);
        for (std::uint64_t seed = 1; seed <= 8; ++seed) EXPECT_TRUE(same_words(normalize(m, {}, seed), n0)) << seed;
        EXPECT_TRUE(same_words(normalize(n0), n0));
    }
}

TEST(Normalize, WidthBoundFlagsResidue) {
    ChordConfig tight{C, 2};
    auto m = morphism_of(CObject::plus(1), {Layer::cup(1), Layer::cup(1), Layer::slice(embed_slice(t(3, 1, 2), 0, 5))});
    auto n = normalize(m, tight);
    EXPECT_TRUE(n.partial);
    EXPECT_FALSE(normalize(m).partial);
}

TEST(Category, CompositionTensorAndUnits) {
    std::mt19937_64 rng(3);
    auto f = morphism_of(CObject::plus(2), {Layer::slice(random_slice(2, rng))});
    EXPECT_TRUE(same_words(normalize(compose(f, identity(CObject::plus(2)))), normalize(f)));
    EXPECT_TRUE(same_words(normalize(compose(identity(CObject::plus(2)), f)), normalize(f)));
    auto id2 = tensor(identity(CObject::plus(1)), identity(CObject::plus(1)));
    EXPECT_EQ(id2.source.width, 2);
    EXPECT_TRUE(same_words(normalize(id2), normalize(identity(CObject::plus(2)))));
    auto g = morphism_of(CObject::plus(1), {Layer::slice(random_slice(1, rng))});
    EXPECT_THROW(compose(f, g), Error);
    // slices on different tensor factors commute after normalization
    auto fg = tensor(f, g);
    auto gf = compose(tensor(identity(CObject::plus(2)), g), tensor(f, identity(CObject::plus(1))));
    EXPECT_TRUE(same_words(normalize(fg), normalize(gf)));
    EXPECT_TRUE(normalize(f + Rat(-1) * f).is_zero());
}

TEST(Transpose, IdentityAndInvolution) {
    EXPECT_TRUE(same_words(transpose(identity(CObject::plus(2))), normalize(identity(CObject::plus(2)))));
    std::mt19937_64 rng(17);
    for (int w = 1; w <= 3; ++w) {
        auto f = morphism_of(CObject::plus(w), {Layer::slice(random_slice(w, rng))});
        EXPECT_TRUE(same_words(transpose(transpose(f)), normalize(f))) << "width " << w;
    }
}

TEST(Relations, ZigZagInvarianceAndFourTerm) {
    auto rep = relation_checks(associator(false));
    EXPECT_TRUE(rep.ok()) << rep.str();
    EXPECT_GE(rep.entries.size(), 8u);
}

TEST(Nu, Examples) {
    auto one1 = Series::one(ft(1), C);
    EXPECT_EQ(nu_of(Series::one(free_xy(), C)), one1);
    auto x = Series::gen(free_xy(), C, GeneratorId::letter(0)), y = Series::gen(free_xy(), C, GeneratorId::letter(1));
    EXPECT_TRUE(nu_of(series_exp(bracket(x, y) * Rat(1, 7))).degree_part(1).is_zero());
    auto nu = nu_of(associator(false).phi);
    EXPECT_TRUE(is_grouplike(nu).ok);
    EXPECT_EQ(rho_of(Series::one(free_xy(), C)), one1);
    // a linear term survives the snake
    EXPECT_NE(nu_of(series_exp(x * Rat(1, 2))), one1);
}

TEST(Unknot, OmegaIsIndependentOfTheAssociator) {
    auto a1 = associator(false), a2 = associator(true);
    ASSERT_NE(a1.phi, a2.phi);
    EXPECT_EQ(omega_inverse(a1), omega_inverse(a2));
}

TEST(Unknot, ChainsCloseForBothVariants) {
    auto a = associator(false);
    for (auto g : {grt_identity(4), grt_element(1, 2), grt_element(-3, Rat(1, 2))})
        for (auto v : {ActVariant::Gprime, ActVariant::Rho}) {
            auto rep = unknot_chain_verify(g, a, v);
            EXPECT_TRUE(rep.ok()) << rep.str();
        }
}

TEST(GrtAct, UnitLoopAndComposition) {
    std::mt19937_64 rng(29);
    auto g = grt_element(1, 2);
    auto loop = morphism_of(CObject::plus(0), {Layer::cup(1), Layer::cap(1)});
    for (auto v : {ActVariant::Gprime, ActVariant::Rho}) {
        EXPECT_TRUE(same_words(grt_act(g, loop, v), normalize(loop)));
        for (int k = 0; k < 4; ++k) {
            auto f = morphism_of(CObject::plus(2), {Layer::slice(random_slice(2, rng))});
            auto m = morphism_of(CObject::plus(2), {Layer::cup(1), Layer::slice(embed_slice(random_slice(2, rng), 1, 4)), Layer::cap(3)});
            EXPECT_TRUE(same_words(grt_act(grt_identity(4), f, v), normalize(f)));
            EXPECT_TRUE(same_words(grt_act(g, compose(m, f), v), normalize(compose(grt_act(g, m, v), grt_act(g, f, v)))));
        }
    }
    // chords scale by lambda
    auto h = morphism_of(CObject::plus(2), {Layer::slice(Series::one(ft(2), C) + t(2, 1, 2))});
    auto gh = grt_act(g, h, ActVariant::Gprime);
    EXPECT_EQ(slice_value(gh, 2), Series::one(ft(2), C) + t(2, 1, 2) * 2);
}

TEST(MorphismFile, RoundTripAndErrors) {
    std::mt19937_64 rng(31);
    auto m = morphism_of(CObject::plus(3), {Layer::cup(1), Layer::permutation({2, 1, 3, 4, 5}), Layer::cap(4),
                                            Layer::slice(random_slice(3, rng)), Layer::assoc(1, associator(false).phi)},
                         Rat(-3, 7));
    auto text = write_chord_morphism(m);
    EXPECT_NE(text.find("CUP(1)"), std::string::npos);
    EXPECT_NE(text.find("PERM(2 1 3 4 5)"), std::string::npos);
    EXPECT_NE(text.find("SLICE("), std::string::npos);
    auto back = read_chord_morphism(text);
    EXPECT_EQ(back.words, m.words);
    EXPECT_EQ(write_chord_morphism(back), text);
    EXPECT_THROW(read_chord_morphism("chordmorphism\nsource +\ntarget +\nword 1\nCUP(1\nendword\nend\n"), Error);
    EXPECT_THROW(read_chord_morphism("chordmorphism\nsource +\ntarget (+ +)\nword 1\nendword\nend\n"), Error);
    EXPECT_THROW(read_chord_morphism("chordmorphism\nsource +\ntarget +\nCAP(1)\nend\n"), Error);
}
