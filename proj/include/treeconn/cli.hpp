#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace treeconn {

// Exit codes: 0 object found / condition holds, 1 certified negative,
// 2 usage or capacity error (including undecided searches).
int cli_run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace treeconn
