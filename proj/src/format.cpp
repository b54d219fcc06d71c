#include "starb/format.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <vector>

namespace starb {

namespace {

std::string fmt_g(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    // Guard against locales with a comma decimal separator.
    for (char& ch : buf) {
        if (ch == ',') ch = '.';
        if (ch == '\0') break;
    }
    return buf;
}

} // namespace

std::string fmt17(double v) { return fmt_g(v, 17); }
std::string fmt7(double v) { return fmt_g(v, 7); }

std::string fmt_complex(std::complex<double> v, int digits) {
    std::string out = fmt_g(v.real(), digits);
    const double im = v.imag();
    if (im == 0.0) return out;
    if (!(im < 0.0)) out += '+';
    out += fmt_g(im, digits) + "i";
    return out;
}

std::complex<double> parse_complex(const std::string& text) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    }
    if (s.empty()) throw std::invalid_argument("empty complex literal");
    const bool has_i = s.find('i') != std::string::npos || s.find('j') != std::string::npos;
    if (!has_i) return {std::stod(s), 0.0};

    // Split into real part and imaginary part at the last sign that is not
    // an exponent sign and not leading.
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
        const char c = s[k];
        if ((c == '+' || c == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    auto imag_of = [](std::string part) {
        // part ends with i/j; "i" alone means 1.
        if (!part.empty() && (part.back() == 'i' || part.back() == 'j')) part.pop_back();
        if (part.empty() || part == "+") return 1.0;
        if (part == "-") return -1.0;
        return std::stod(part);
    };
    const bool tail_is_imag = s.back() == 'i' || s.back() == 'j';
    if (split == std::string::npos) {
        if (!tail_is_imag) throw std::invalid_argument("bad complex literal: " + text);
        return {0.0, imag_of(s)};
    }
    const std::string head = s.substr(0, split);
    const std::string tail = s.substr(split);
    if (tail_is_imag) return {std::stod(head), imag_of(tail)};
    // imaginary part written first, e.g. "2i+1"
    if (head.back() == 'i' || head.back() == 'j') return {std::stod(tail), imag_of(head)};
    throw std::invalid_argument("bad complex literal: " + text);
}

std::vector<std::complex<double>> parse_complex_list(const std::string& text) {
    std::vector<std::string> tokens;
    std::string cur;
    for (char c : text) {
        if (c == ',' || c == ';') {
            tokens.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    tokens.push_back(cur);

    bool any_i = false;
    for (const auto& t : tokens) {
        if (t.find('i') != std::string::npos || t.find('j') != std::string::npos) {
            any_i = true;
        }
    }
    std::vector<std::complex<double>> out;
    if (!any_i && tokens.size() % 2 == 0) {
        for (std::size_t k = 0; k < tokens.size(); k += 2) {
            out.emplace_back(std::stod(tokens[k]), std::stod(tokens[k + 1]));
        }
        return out;
    }
    for (const auto& t : tokens) out.push_back(parse_complex(t));
    return out;
}

} // namespace starb
