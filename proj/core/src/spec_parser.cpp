// Recursive-descent parser for component spec strings:
//
//   spec  := item (("+" | ",") item)*
//   item  := [COUNT "x"] KIND SIZE
//   KIND  := "P" | "C"
//
// Case-insensitive; whitespace is allowed between tokens.

#include <cctype>
#include <charconv>
#include <string>

#include "cce/errors.hpp"
#include "cce/shape.hpp"

namespace cce {
namespace {

// Keeps a typo like "100000000xP1" from allocating a giant item list.
constexpr long long kMaxVertices = 1'000'000;

class SpecParser {
public:
    explicit SpecParser(std::string_view text) : text_(text) {}

    ComponentSpec parse() {
        std::vector<ComponentItem> items;
        skip_ws();
        if (at_end()) fail("empty component spec");
        item(items);
        while (true) {
            skip_ws();
            if (at_end()) break;
            char c = text_[pos_];
            if (c != '+' && c != ',') fail("expected '+' or ','");
            ++pos_;
            item(items);
        }
        return ComponentSpec(std::move(items));
    }

private:
    void item(std::vector<ComponentItem>& items) {
        skip_ws();
        long long count = 1;
        if (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            count = number("count");
            skip_ws();
            if (at_end() || std::tolower(static_cast<unsigned char>(text_[pos_])) != 'x')
                fail("expected 'x' after count");
            ++pos_;
            skip_ws();
        }
        if (at_end()) fail("expected 'P' or 'C'");
        const char k = static_cast<char>(std::tolower(static_cast<unsigned char>(text_[pos_])));
        if (k != 'p' && k != 'c') fail("expected 'P' or 'C'");
        ++pos_;
        skip_ws();
        const std::size_t size_pos = pos_;
        const long long size = number("size");
        const ComponentKind kind = k == 'c' ? ComponentKind::Cycle : ComponentKind::Path;
        if (kind == ComponentKind::Cycle && size < 3) {
            pos_ = size_pos;
            fail("cycle size must be at least 3");
        }
        total_ += count * size;
        if (total_ > kMaxVertices) fail("component spec too large");
        for (long long i = 0; i < count; ++i) items.push_back({kind, static_cast<int>(size)});
    }

    long long number(const char* what) {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail(std::string("expected ") + what);
        long long value = 0;
        auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
        if (ec != std::errc{} || value > kMaxVertices) {
            pos_ = start;
            fail(std::string(what) + " out of range");
        }
        if (value == 0) {
            pos_ = start;
            fail(std::string(what) + " must be positive");
        }
        return value;
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError("component spec, column " + std::to_string(pos_ + 1) + ": " + message);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    long long total_ = 0;
};

}  // namespace

ComponentSpec ComponentSpec::parse(std::string_view text) { return SpecParser(text).parse(); }

}  // namespace cce
