// Command-line front end.
//
//   rtea check reach|cover|buchi --model FILE --x0 NUM --time NUM|inf [--target NUM] [--verify]
//   rtea eval --model FILE --x0 NUM --time NUM|inf
//   rtea dump --model FILE [--what behavior|star]
//   rtea normalize R,P,B ...
//
// Results are JSON on stdout. Exit status: 0 yes (or success), 1 no,
// 2 usage, parse or model error.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rtea::cli {

enum ExitCode : int { Yes = 0, No = 1, Usage = 2 };

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rtea::cli
