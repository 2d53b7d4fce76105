#ifndef BINEDGE_CERT_IO_HPP
#define BINEDGE_CERT_IO_HPP

#include <string>
#include <string_view>

#include "binedge/certificates.hpp"

namespace binedge {

/// Certificate text:
///
///   name <word>            (optional)
///   source <text>          (optional)
///   ring <m> <n> <char>
///   target:
///   <polynomial> | gbei <graph file>
///   witness:
///   <polynomial>
///   claims:
///   f <polynomial> ^ <k>
///
/// `#` starts a comment. A relative graph path is resolved against `base_dir`.
Certificate parse_certificate(std::string_view text, const std::string& base_dir = ".");
Certificate read_certificate_file(const std::string& path);

/// Inverse of parse_certificate. A graph target is written as
/// `gbei <graph_file>` when graph_file is nonempty.
std::string format_certificate(const Certificate& cert, const std::string& graph_file = "");

}  // namespace binedge

#endif  // BINEDGE_CERT_IO_HPP
