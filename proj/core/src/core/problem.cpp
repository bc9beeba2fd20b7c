#include "nmeasure/core/problem.hpp"

namespace nmeasure {

std::string Channels::to_string() const {
    std::string out = "u";
    if (has(Channel::dt)) out += ",u_t";
    if (has(Channel::dx)) out += ",u_x";
    if (has(Channel::dxx)) out += ",u_xx";
    return out;
}

Channels RandomProblem::all_channels() const {
    Channels c = interior.channels.merged(initial.channels);
    for (const auto& bc : boundaries) c = c.merged(bc.term.channels);
    return c;
}

}  // namespace nmeasure
