#include "domlab/expr.hpp"

#include <cctype>
#include <charconv>
#include <cstdint>
#include <limits>

#include "domlab/errors.hpp"

namespace domlab {

namespace {

constexpr std::uint64_t modulus_cap = static_cast<std::uint64_t>(INT64_MAX);

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) { skip_ws(); }

    bool done() const { return pos_ >= text_.size(); }
    std::size_t pos() const { return pos_; }
    char peek() const { return text_[pos_]; }

    bool accept(char c) {
        if (done() || text_[pos_] != c) return false;
        ++pos_;
        skip_ws();
        return true;
    }

    void expect(char c, const std::string& context) {
        if (!accept(c))
            throw SyntaxError("expected '" + std::string(1, c) + "' " + context, pos_);
    }

    std::uint64_t number(const std::string& what) {
        if (done() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw SyntaxError("expected " + what, pos_);
        std::size_t end = pos_;
        while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
        std::uint64_t value = 0;
        const auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + end, value);
        if (ec != std::errc() || ptr != text_.data() + end)
            throw ValueError(what + " at position " + std::to_string(pos_) +
                             " does not fit in 64 bits");
        pos_ = end;
        skip_ws();
        return value;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

// One "Z" term: modulus 0 encodes the infinite cyclic factor.
std::pair<std::uint64_t, std::uint64_t> parse_term(Cursor& cur) {
    cur.expect('Z', "to start a summand");
    std::uint64_t modulus = 0;
    if (cur.accept('_')) {
        const std::size_t at = cur.pos();
        modulus = cur.number("a cyclic order after '_'");
        if (modulus == 0)
            throw ValueError("Z_0 is not a group (position " + std::to_string(at) + ")");
        if (modulus == 1)
            throw ValueError("Z_1 is rejected: write Z for the infinite cyclic group or 1 for "
                             "the trivial group (position " + std::to_string(at) + ")");
        if (modulus > modulus_cap)
            throw ValueError("cyclic order " + std::to_string(modulus) +
                             " exceeds the arithmetic cap of 2^63-1");
    }
    std::uint64_t multiplicity = 1;
    if (cur.accept('^')) {
        const std::size_t at = cur.pos();
        multiplicity = cur.number("a multiplicity after '^'");
        if (multiplicity == 0)
            throw ValueError("multiplicity ^0 is not allowed; drop the summand instead "
                             "(position " + std::to_string(at) + ")");
    }
    return {modulus, multiplicity};
}

}  // namespace

GroupExpression parse_expression(std::string_view text) {
    Cursor cur(text);
    if (cur.done()) throw SyntaxError("empty group expression", cur.pos());

    if (cur.peek() == 'F') {
        cur.accept('F');
        cur.expect('_', "after 'F' (free groups are written F_<rank>)");
        const std::uint64_t rank = cur.number("a rank after 'F_'");
        if (rank > static_cast<std::uint64_t>(FreeGroup::max_rank))
            throw ValueError("free-group rank " + std::to_string(rank) +
                             " exceeds the supported maximum " +
                             std::to_string(FreeGroup::max_rank));
        if (!cur.done()) {
            if (cur.peek() == '+')
                throw SyntaxError("free groups cannot appear inside sums", cur.pos());
            throw SyntaxError("unexpected trailing input after the free group", cur.pos());
        }
        return FreeGroup::of_rank(static_cast<std::int64_t>(rank));
    }

    if (cur.peek() == '1') {
        cur.accept('1');
        if (!cur.done())
            throw SyntaxError("'1' denotes the trivial group and stands alone", cur.pos());
        return canonicalize({});
    }

    RawSummands raw;
    while (true) {
        raw.push_back(parse_term(cur));
        if (cur.done()) break;
        if (cur.peek() == '+') {
            cur.accept('+');
            if (!cur.done() && cur.peek() == 'F')
                throw SyntaxError("free groups cannot appear inside sums", cur.pos());
            continue;
        }
        throw SyntaxError("expected '+' or end of input", cur.pos());
    }
    return canonicalize(raw);
}

std::string render(const GroupExpression& g) {
    if (const AbelianGroup* a = std::get_if<AbelianGroup>(&g)) return render(*a);
    return render(std::get<FreeGroup>(g));
}

}  // namespace domlab
