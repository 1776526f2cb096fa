#pragma once

#include "qjordan/bij.hpp"
#include "qjordan/partition.hpp"
#include "qjordan/poly.hpp"
#include "qjordan/rook.hpp"

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qjordan {

// Expanded form: terms "c*q^e" in descending exponent, joined by " + "
// (" - " for negative coefficients); unit coefficients and exponents 0, 1
// are abbreviated.  The zero polynomial prints "0".
inline std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int e = *p.degree(); e >= 0; --e) {
        const Int& c = p.coeff(e);
        if (c == 0) continue;
        const bool negative = c < 0;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        const Int a = negative ? Int(-c) : c;
        if (e == 0) {
            out += a.str();
        } else {
            if (a != 1) out += a.str() + "*";
            out += e == 1 ? "q" : "q^" + std::to_string(e);
        }
    }
    return out;
}

// Factored form "(q-1)^m * (G)", with G printed highest degree first.
inline std::string to_factored_string(const Poly& p) {
    if (p.is_zero()) return "0";
    const auto fac = extract_qminus1(p);
    if (fac.multiplicity == 0) return to_string(p);
    std::string prefix = fac.multiplicity == 1
                             ? "(q-1)"
                             : "(q-1)^" + std::to_string(fac.multiplicity);
    return prefix + " * (" + to_string(fac.quotient) + ")";
}

namespace detail {

inline Poly parse_term(const std::string& term) {
    // forms: "c", "q", "q^e", "c*q", "c*q^e"
    Int coeff{1};
    std::string rest = term;
    if (auto star = rest.find('*'); star != std::string::npos) {
        coeff = Int(rest.substr(0, star));
        rest = rest.substr(star + 1);
    } else if (rest.find('q') == std::string::npos) {
        return Poly{Int(rest)};
    }
    if (rest.empty() || rest[0] != 'q') throw std::invalid_argument("bad term: " + term);
    int e = 1;
    if (rest.size() > 1) {
        if (rest[1] != '^') throw std::invalid_argument("bad term: " + term);
        e = std::stoi(rest.substr(2));
    }
    return Poly::monomial(coeff, e);
}

inline Poly parse_term_list(const std::string& text) {
    Poly out;
    size_t pos = 0;
    int sign = 1;
    if (!text.empty() && text[0] == '-') {
        sign = -1;
        pos = 1;
    }
    while (pos < text.size()) {
        size_t next = text.find(' ', pos);
        const std::string term = text.substr(pos, next - pos);
        out += Poly{Int(sign)} * parse_term(term);
        if (next == std::string::npos) break;
        // expect " + " or " - "
        if (next + 2 >= text.size() || text[next + 2] != ' ')
            throw std::invalid_argument("bad polynomial text: " + text);
        sign = text[next + 1] == '-' ? -1 : 1;
        pos = next + 3;
    }
    return out;
}

}  // namespace detail

// Parses both the expanded and the factored form.
inline Poly parse_poly(const std::string& text) {
    if (text == "0") return Poly{};
    if (text.rfind("(q-1)", 0) == 0) {
        size_t pos = 5;
        int m = 1;
        if (pos < text.size() && text[pos] == '^') {
            size_t end = text.find(' ', pos);
            m = std::stoi(text.substr(pos + 1, end - pos - 1));
            pos = end;
        }
        const std::string sep = " * (";
        if (text.compare(pos, sep.size(), sep) != 0 || text.back() != ')')
            throw std::invalid_argument("bad factored polynomial: " + text);
        const std::string inner = text.substr(pos + sep.size(),
                                              text.size() - pos - sep.size() - 1);
        return Poly::q_minus_one().pow(m) * detail::parse_term_list(inner);
    }
    if (!text.empty() && text.front() == '(' && text.back() == ')')
        return detail::parse_term_list(text.substr(1, text.size() - 2));
    return detail::parse_term_list(text);
}

// Partition as comma-separated parts; the empty partition prints "-".
inline std::string to_string(const Partition& p) {
    if (p.empty()) return "-";
    std::string out;
    for (int i = 1; i <= p.length(); ++i) {
        if (i > 1) out += ",";
        out += std::to_string(p.part(i));
    }
    return out;
}

inline Partition parse_partition(const std::string& text) {
    if (text == "-" || text.empty()) return Partition{};
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(std::stoi(item));
    return Partition{std::move(parts)};
}

// Placement as semicolon-separated "row,col" pairs; empty prints "-".
inline std::string to_string(const RookPlacement& C) {
    if (C.rooks().empty()) return "-";
    std::string out;
    for (const auto& r : C.rooks()) {
        if (!out.empty()) out += ";";
        out += std::to_string(r.row) + "," + std::to_string(r.col);
    }
    return out;
}

inline RookPlacement parse_placement(const std::string& text, int n) {
    std::vector<Square> rooks;
    if (text != "-" && !text.empty()) {
        std::stringstream ss(text);
        std::string pair;
        while (std::getline(ss, pair, ';')) {
            const auto comma = pair.find(',');
            if (comma == std::string::npos)
                throw std::invalid_argument("bad placement text: " + text);
            rooks.push_back(Square{std::stoi(pair.substr(0, comma)),
                                   std::stoi(pair.substr(comma + 1))});
        }
    }
    return RookPlacement{FerrersBoard::staircase(n), std::move(rooks)};
}

// Blocks joined by "|", elements ascending, blocks in convention order.
inline std::string to_string(const SetPartition& S) {
    std::string out;
    for (const auto& b : S.blocks()) {
        if (!out.empty()) out += "|";
        for (size_t i = 0; i < b.size(); ++i) {
            if (i > 0) out += ",";
            out += std::to_string(b[i]);
        }
    }
    return out;
}

inline SetPartition parse_set_partition(const std::string& text) {
    std::vector<std::vector<int>> blocks;
    std::stringstream ss(text);
    std::string block;
    while (std::getline(ss, block, '|')) {
        std::vector<int> members;
        std::stringstream bs(block);
        std::string item;
        while (std::getline(bs, item, ',')) members.push_back(std::stoi(item));
        blocks.push_back(std::move(members));
    }
    return SetPartition{std::move(blocks)};
}

}  // namespace qjordan
