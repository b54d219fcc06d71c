#pragma once

#include <complex>
#include <string>
#include <vector>

namespace starb {

/// Locale-independent float formatting: 17 significant digits for machine
/// output, 7 for text tables.
std::string fmt17(double v);
std::string fmt7(double v);

/// Complex as "a+bi" / "a-bi" with the given significant digits.
std::string fmt_complex(std::complex<double> v, int digits = 17);

/// Parses a complex literal: "1.5", "i", "-i", "2i", "1+2i", "0.5-0.25i".
std::complex<double> parse_complex(const std::string& text);

/// Parses a list of complex values. Tokens are separated by ';' or ','.
/// If any token carries an 'i' or the count is odd, each token is one
/// complex literal; an even count of plain reals is read as re,im pairs.
std::vector<std::complex<double>> parse_complex_list(const std::string& text);

} // namespace starb
