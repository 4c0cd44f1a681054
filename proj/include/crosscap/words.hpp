#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace crosscap::words {

/// One generator token. Composition is functional: in a written word the last
/// token acts on the surface first.
///
/// Token grammar (whitespace separated; "|" is a cosmetic separator):
///   S           the reflection sigma (S^-1 is accepted and identical)
///   T, T^k      the rotation, or its k-th power (k any integer)
///   A1, B3, GAMMA10, D6, E, F, ...   twist about the named curve; "^-1" or a
///                                    trailing integer exponent marks powers
/// Twist token names are the upper-cased curve names of the active table.
struct GenToken {
    enum class Kind { Twist, Sigma, Rotation };
    Kind kind = Kind::Twist;
    std::string name;  // lower-case curve name for Twist
    long exponent = 1;

    friend bool operator==(const GenToken&, const GenToken&) = default;
};

struct MappingClassWord {
    std::vector<GenToken> tokens;
    friend bool operator==(const MappingClassWord&, const MappingClassWord&) = default;
};

struct WordParseError : std::runtime_error {
    explicit WordParseError(const std::string& what) : std::runtime_error(what) {}
};

MappingClassWord parse_word(std::string_view text);

/// Free reduction in <twists> * <sigma | sigma^2> * <T>: adjacent powers of the
/// same twist or of T merge and cancel, adjacent sigmas cancel.
MappingClassWord reduce_word(const MappingClassWord& w);

/// Do both words freely reduce to the same normal form?
bool words_equal_reduced(const MappingClassWord& a, const MappingClassWord& b);

std::string to_string(const MappingClassWord& w);

}  // namespace crosscap::words
