// SPDX-License-Identifier: Apache-2.0
// Truncated series in free or presented graded associative algebras.
#pragma once

#include "artifact/ratmat.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace artifact {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Family : std::uint8_t { T = 0, X = 1, Letter = 2 };

struct GeneratorId {
    Family family = Family::T;
    int i = 0;
    int j = 0;  // unused for letters

    static GeneratorId t(int a, int b);
    static GeneratorId X(int a, int b);
    static GeneratorId letter(int k);  // 0 -> x, 1 -> y

    std::string token() const;
    static GeneratorId parse(const std::string& tok);

    auto operator<=>(const GeneratorId&) const = default;
};

// Word in generator indices of its algebra. Ordered by length, then lex.
struct Monomial {
    std::vector<std::uint8_t> w;

    int degree() const { return static_cast<int>(w.size()); }
    bool operator==(const Monomial& o) const { return w == o.w; }
    bool operator<(const Monomial& o) const {
        if (w.size() != o.w.size()) return w.size() < o.w.size();
        return w < o.w;
    }
};

using Terms = std::map<Monomial, Rat>;

void add_term(Terms& t, const Monomial& m, const Rat& c);

class Algebra {
public:
    virtual ~Algebra() = default;
    virtual const std::string& descriptor() const = 0;
    virtual const std::vector<GeneratorId>& generators() const = 0;
    virtual bool is_free() const { return false; }
    // Adds c * normal_form(m) to out. Requires the table up to m.degree().
    virtual void reduce_into(const Monomial& m, const Rat& c, Terms& out) const = 0;
    // Builds normal-form data through degree d (no-op for free algebras).
    virtual void require_degree(int d) const = 0;

    std::optional<int> index_of(const GeneratorId& g) const;
};

std::shared_ptr<const Algebra> free_algebra(std::vector<GeneratorId> gens,
                                            std::string descriptor);
// free(x,y)
std::shared_ptr<const Algebra> free_xy();

class Series {
public:
    Series(std::shared_ptr<const Algebra> alg, int D);

    static Series scalar(std::shared_ptr<const Algebra> alg, int D, const Rat& c);
    static Series one(std::shared_ptr<const Algebra> alg, int D) { return scalar(alg, D, 1); }
    static Series gen(std::shared_ptr<const Algebra> alg, int D, const GeneratorId& g);
    // Reduces arbitrary words to normal form; drops degrees above D.
    static Series from_terms(std::shared_ptr<const Algebra> alg, int D, const Terms& raw);

    const std::shared_ptr<const Algebra>& algebra() const { return alg_; }
    int truncation() const { return D_; }
    const Terms& terms() const { return t_; }

    bool is_zero() const { return t_.empty(); }
    Rat constant() const;
    Series degree_part(int d) const;
    Series truncate(int D) const;  // to a lower truncation
    int min_degree() const;        // -1 if zero
    std::size_t size() const { return t_.size(); }

    Series operator+(const Series& o) const;
    Series operator-(const Series& o) const;
    Series operator-() const;
    Series operator*(const Series& o) const;
    Series operator*(const Rat& c) const;
    Series& operator+=(const Series& o);
    Series& operator-=(const Series& o);
    bool operator==(const Series& o) const;
    bool operator!=(const Series& o) const { return !(*this == o); }

    std::string str() const;

private:
    void check_compatible(const Series& o) const;

    std::shared_ptr<const Algebra> alg_;
    int D_;
    Terms t_;
};

Series bracket(const Series& a, const Series& b);
Series series_exp(const Series& a);
Series series_log(const Series& g);
Series series_inverse(const Series& g);
Series series_pow(const Series& a, int k);

// Image of phi (over a two-letter free algebra) under x -> a, y -> b.
Series substitute(const Series& phi, const Series& a, const Series& b);
// Algebra morphism given on generators: images[k] is the image of generator k
// of a's algebra; all images live in one target algebra with zero constant term.
Series apply_morphism(const Series& a, const std::vector<Series>& images);

struct Witness {
    bool ok = true;
    std::string detail;
};
Witness is_primitive(const Series& p);
Witness is_grouplike(const Series& g);

struct LyndonWord {
    std::vector<std::uint8_t> letters;
    Terms expansion;  // standard bracketing, letters as alphabet indices
};
std::vector<LyndonWord> lyndon_basis(int alphabet, int d);
// Standard bracketing of an arbitrary Lyndon word.
Terms lyndon_bracket(const std::vector<std::uint8_t>& w);

// Witt formula: dimension of the degree-d free Lie component on g letters.
long witt_dimension(int g, int d);

// Series file block.
std::string write_series(const Series& s);
using AlgebraResolver = std::function<std::shared_ptr<const Algebra>(const std::string&)>;
Series read_series(const std::string& text, const AlgebraResolver& resolve);

}  // namespace artifact
