#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tamcy {

// Entry point shared by the cy-verify binary and the tests.  Takes the
// arguments without the program name and returns the process exit code:
// 0 on success, 1 when a verification campaign reports failures, 2 for
// usage or input errors.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace tamcy
