#include "crosscap/words.hpp"

#include <cctype>
#include <sstream>

namespace crosscap::words {

namespace {

long parse_exponent(std::string_view tok, size_t caret, const std::string& full) {
    std::string num(tok.substr(caret + 1));
    if (num.empty()) throw WordParseError("empty exponent in token: " + full);
    size_t pos = 0;
    long e = 0;
    try {
        e = std::stol(num, &pos);
    } catch (...) {
        throw WordParseError("bad exponent in token: " + full);
    }
    if (pos != num.size()) throw WordParseError("bad exponent in token: " + full);
    return e;
}

}  // namespace

MappingClassWord parse_word(std::string_view text) {
    MappingClassWord w;
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) {
        if (tok == "|") continue;
        long exp = 1;
        std::string body = tok;
        if (auto caret = tok.find('^'); caret != std::string::npos) {
            exp = parse_exponent(tok, caret, tok);
            body = tok.substr(0, caret);
        }
        if (body.empty()) throw WordParseError("empty token");
        GenToken t;
        if (body == "S") {
            t.kind = GenToken::Kind::Sigma;
            t.exponent = exp;
        } else if (body == "T") {
            t.kind = GenToken::Kind::Rotation;
            t.exponent = exp;
        } else {
            for (char c : body)
                if (!std::isupper(static_cast<unsigned char>(c)) &&
                    !std::isdigit(static_cast<unsigned char>(c)))
                    throw WordParseError("bad twist token: " + tok);
            if (exp != 1 && exp != -1)
                throw WordParseError("twist exponents must be +-1: " + tok);
            t.kind = GenToken::Kind::Twist;
            t.exponent = exp;
            t.name.reserve(body.size());
            for (char c : body) t.name.push_back(static_cast<char>(std::tolower(c)));
        }
        w.tokens.push_back(std::move(t));
    }
    return w;
}

MappingClassWord reduce_word(const MappingClassWord& w) {
    MappingClassWord out;
    for (const auto& t : w.tokens) {
        GenToken cur = t;
        if (cur.kind == GenToken::Kind::Sigma) cur.exponent = 1;  // sigma is an involution
        bool merged = false;
        while (!out.tokens.empty()) {
            GenToken& top = out.tokens.back();
            if (top.kind != cur.kind) break;
            if (cur.kind == GenToken::Kind::Twist && top.name != cur.name) break;
            if (cur.kind == GenToken::Kind::Sigma) {
                out.tokens.pop_back();  // S S = 1
                merged = true;
                break;
            }
            top.exponent += cur.exponent;
            if (top.exponent == 0) {
                out.tokens.pop_back();
                // exposing a new top may enable further cancellation with cur? no:
                // cur is consumed by the merge in full
            }
            merged = true;
            break;
        }
        if (!merged) out.tokens.push_back(cur);
    }
    return out;
}

bool words_equal_reduced(const MappingClassWord& a, const MappingClassWord& b) {
    return reduce_word(a) == reduce_word(b);
}

std::string to_string(const MappingClassWord& w) {
    std::string s;
    for (const auto& t : w.tokens) {
        if (!s.empty()) s.push_back(' ');
        switch (t.kind) {
            case GenToken::Kind::Sigma:
                s += "S";
                break;
            case GenToken::Kind::Rotation:
                s += "T";
                if (t.exponent != 1) s += "^" + std::to_string(t.exponent);
                break;
            case GenToken::Kind::Twist: {
                for (char c : t.name) s.push_back(static_cast<char>(std::toupper(c)));
                if (t.exponent != 1) s += "^" + std::to_string(t.exponent);
                break;
            }
        }
    }
    return s;
}

}  // namespace crosscap::words
