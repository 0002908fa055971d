#ifndef RD_ERROR_HPP
#define RD_ERROR_HPP

#include <stdexcept>
#include <string>

namespace rd {

enum class errc {
    loop_edge,
    duplicate_edge,
    vertex_out_of_range,
    order_too_large,
    same_vertex,
    trivial_graph,
    disconnected,
    length_mismatch,
    too_large,
    odd_order,
    degree_out_of_range,
    k_out_of_range,
};

const char* errc_name(errc c);

// Library-wide exception type. code() identifies the contract violation,
// what() carries the offending edge/vertex/value.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& detail)
        : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

}  // namespace rd

#endif
