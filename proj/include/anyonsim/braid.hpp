#pragma once

#include "anyonsim/linalg.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace anyonsim {

/// A word in the braid group on `n_strands` strands. Letter k > 0 stands for
/// the counterclockwise exchange B_k of strands k and k+1, k < 0 for its
/// inverse. Letters are stored in chronological order: the leftmost letter is
/// applied to the state first.
struct BraidWord {
    std::vector<int> letters;
    int n_strands = 1;

    BraidWord() = default;
    BraidWord(std::vector<int> letters, int n_strands);

    bool empty() const noexcept { return letters.empty(); }
    std::size_t size() const noexcept { return letters.size(); }
    std::string to_string() const;

    friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

/// Parses whitespace-separated nonzero integers, e.g. "1 -2 1".
BraidWord parse_word(std::string_view text, int n_strands);

/// Cancels adjacent B_k B_k^{-1} pairs until none remain. Artin relations are
/// not applied.
BraidWord free_reduce(const BraidWord& w);

/// Reverses the word and negates every letter.
BraidWord inverse(const BraidWord& w);

/// Unitary representation of the braid group: one dim x dim matrix per
/// generator B_1 ... B_{n_strands-1}.
class Representation {
public:
    Representation(std::string name, int n_strands, std::vector<Matrix> generators);

    const std::string& name() const noexcept { return name_; }
    int n_strands() const noexcept { return n_strands_; }
    Eigen::Index dim() const noexcept { return dim_; }

    /// Generator B_j, 1-based.
    const Matrix& generator(int j) const;
    const std::vector<Matrix>& generators() const noexcept { return generators_; }

private:
    std::string name_;
    int n_strands_;
    Eigen::Index dim_;
    std::vector<Matrix> generators_;
};

/// Matrix of the word: G(w_n) ... G(w_2) G(w_1), inverse letters use G^dag.
Matrix word_unitary(const Representation& rep, const BraidWord& w);

struct RelationReport {
    double max_commutation_defect = 0.0;
    double max_yang_baxter_defect = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

inline constexpr double kDefaultRelationTolerance = 1e-10;

/// Far commutation B_i B_j = B_j B_i (|i-j| >= 2) and Yang-Baxter
/// B_j B_{j+1} B_j = B_{j+1} B_j B_{j+1}, with defects measured in operator norm.
RelationReport check_relations(const Representation& rep, double tol = kDefaultRelationTolerance);

/// One-dimensional representation B_j -> e^{i theta}.
Representation abelian_rep(double theta, int n_strands);

}  // namespace anyonsim
