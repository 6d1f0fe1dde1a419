#pragma once

#include <string>

namespace patentscore::internal {

struct ParsedUrl {
  std::string origin;       // scheme://host[:port], what httplib::Client takes
  std::string path_prefix;  // leading path with no trailing slash, may be empty
};

inline ParsedUrl parse_base_url(const std::string& base_url) {
  ParsedUrl parsed;
  std::size_t scheme_end = base_url.find("://");
  std::size_t host_begin = scheme_end == std::string::npos ? 0 : scheme_end + 3;
  std::size_t path_begin = base_url.find('/', host_begin);
  if (path_begin == std::string::npos) {
    parsed.origin = base_url;
  } else {
    parsed.origin = base_url.substr(0, path_begin);
    parsed.path_prefix = base_url.substr(path_begin);
    while (!parsed.path_prefix.empty() && parsed.path_prefix.back() == '/')
      parsed.path_prefix.pop_back();
  }
  return parsed;
}

inline std::string getenv_or_empty(const char* name) {
  const char* value = std::getenv(name);
  return value ? value : "";
}

}  // namespace patentscore::internal
