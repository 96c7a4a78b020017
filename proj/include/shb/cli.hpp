#pragma once

#include <iosfwd>

namespace shb::cli {

// Exit codes: 0 success, 2 invalid input, 3 domain error.
// The default field characteristic comes from SHB_FIELD_CHAR when set.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace shb::cli
