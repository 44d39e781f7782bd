#pragma once

#include <iosfwd>

namespace randgrp {

// The randgrp command line.  Returns 0 on success, 1 when a precondition or
// verdict fails, 2 on a usage error.
int cli_main(int argc, char const* const* argv, std::ostream& out,
             std::ostream& err);

}  // namespace randgrp
