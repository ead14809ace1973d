#include "wlab/rational.hpp"

#include <sstream>

namespace wlab {

std::string rat_to_string(const Rat& q) {
    std::ostringstream os;
    os << rat_num(q);
    if (rat_den(q) != 1) os << "/" << rat_den(q);
    return os.str();
}

} // namespace wlab
