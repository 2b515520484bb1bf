#include "anyonsim/braid.hpp"

#include "anyonsim/error.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>

namespace anyonsim {

namespace {

constexpr double kGeneratorUnitarityTol = 1e-12;

void check_letter(int letter, int n_strands) {
    if (letter == 0) throw Error(ErrorCode::MalformedToken, "braid letter 0 is not a generator");
    if (std::abs(letter) >= n_strands) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "generator " + std::to_string(std::abs(letter)) + " does not exist on " +
                        std::to_string(n_strands) + " strands");
    }
}

}  // namespace

BraidWord::BraidWord(std::vector<int> letters_in, int n_strands_in)
    : letters(std::move(letters_in)), n_strands(n_strands_in) {
    if (n_strands < 1) throw Error(ErrorCode::InvalidArgument, "n_strands must be positive");
    for (int letter : letters) check_letter(letter, n_strands);
}

std::string BraidWord::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (i) os << ' ';
        os << letters[i];
    }
    return os.str();
}

BraidWord parse_word(std::string_view text, int n_strands) {
    if (n_strands < 1) throw Error(ErrorCode::InvalidArgument, "n_strands must be positive");
    std::vector<int> letters;
    std::size_t pos = 0;
    auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
    while (pos < text.size()) {
        while (pos < text.size() && is_space(text[pos])) ++pos;
        if (pos == text.size()) break;
        std::size_t end = pos;
        while (end < text.size() && !is_space(text[end])) ++end;
        const std::string_view token = text.substr(pos, end - pos);
        // from_chars rejects a leading '+', accept it explicitly.
        std::string_view digits = token;
        if (digits.size() > 1 && digits.front() == '+') digits.remove_prefix(1);
        int value = 0;
        const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
        if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
            throw Error(ErrorCode::MalformedToken, "not an integer: '" + std::string(token) + "'");
        }
        check_letter(value, n_strands);
        letters.push_back(value);
        pos = end;
    }
    return BraidWord(std::move(letters), n_strands);
}

BraidWord free_reduce(const BraidWord& w) {
    std::vector<int> stack;
    stack.reserve(w.letters.size());
    for (int letter : w.letters) {
        if (!stack.empty() && stack.back() == -letter) {
            stack.pop_back();
        } else {
            stack.push_back(letter);
        }
    }
    return BraidWord(std::move(stack), w.n_strands);
}

BraidWord inverse(const BraidWord& w) {
    std::vector<int> letters(w.letters.rbegin(), w.letters.rend());
    for (int& letter : letters) letter = -letter;
    return BraidWord(std::move(letters), w.n_strands);
}

Representation::Representation(std::string name, int n_strands, std::vector<Matrix> generators)
    : name_(std::move(name)), n_strands_(n_strands), dim_(0), generators_(std::move(generators)) {
    if (n_strands_ < 1) throw Error(ErrorCode::InvalidArgument, "n_strands must be positive");
    if (static_cast<int>(generators_.size()) != n_strands_ - 1) {
        throw Error(ErrorCode::DimensionMismatch, "need exactly n_strands - 1 generators");
    }
    dim_ = generators_.empty() ? 1 : generators_.front().rows();
    for (std::size_t j = 0; j < generators_.size(); ++j) {
        const Matrix& g = generators_[j];
        if (g.rows() != dim_ || g.cols() != dim_) {
            throw Error(ErrorCode::DimensionMismatch, "generator matrices must share one square size");
        }
        if (unitarity_defect(g) > kGeneratorUnitarityTol) {
            throw Error(ErrorCode::NotUnitary, "generator B_" + std::to_string(j + 1) + " is not unitary");
        }
    }
}

const Matrix& Representation::generator(int j) const {
    if (j < 1 || j >= n_strands_) {
        throw Error(ErrorCode::IndexOutOfRange, "no generator B_" + std::to_string(j));
    }
    return generators_[static_cast<std::size_t>(j - 1)];
}

Matrix word_unitary(const Representation& rep, const BraidWord& w) {
    if (w.n_strands != rep.n_strands()) {
        throw Error(ErrorCode::DimensionMismatch,
                    "word on " + std::to_string(w.n_strands) + " strands, representation on " +
                        std::to_string(rep.n_strands()));
    }
    Matrix u = Matrix::Identity(rep.dim(), rep.dim());
    for (int letter : w.letters) {
        const Matrix& g = rep.generator(std::abs(letter));
        if (letter > 0) {
            u = g * u;
        } else {
            u = g.adjoint() * u;
        }
    }
    return u;
}

RelationReport check_relations(const Representation& rep, double tol) {
    RelationReport report;
    report.tolerance = tol;
    const int n = rep.n_strands();
    for (int i = 1; i < n; ++i) {
        for (int j = i + 2; j < n; ++j) {
            const Matrix& a = rep.generator(i);
            const Matrix& b = rep.generator(j);
            report.max_commutation_defect =
                std::max(report.max_commutation_defect, op_norm(a * b - b * a));
        }
    }
    for (int j = 1; j + 1 < n; ++j) {
        const Matrix& a = rep.generator(j);
        const Matrix& b = rep.generator(j + 1);
        report.max_yang_baxter_defect =
            std::max(report.max_yang_baxter_defect, op_norm(a * b * a - b * a * b));
    }
    report.pass = report.max_commutation_defect <= tol && report.max_yang_baxter_defect <= tol;
    return report;
}

Representation abelian_rep(double theta, int n_strands) {
    if (n_strands < 1) throw Error(ErrorCode::InvalidArgument, "n_strands must be positive");
    const cplx phase = std::polar(1.0, theta);
    std::vector<Matrix> gens(static_cast<std::size_t>(n_strands - 1), Matrix::Constant(1, 1, phase));
    return Representation("abelian", n_strands, std::move(gens));
}

}  // namespace anyonsim
