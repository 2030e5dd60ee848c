#include "spectral_cs/parallel.hpp"

#include <charconv>
#include <cstdlib>
#include <string_view>

namespace spectral_cs {

std::size_t default_thread_count() {
  std::size_t threads = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("SPECTRAL_CS_THREADS")) {
    const std::string_view text(env);
    std::size_t cap = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), cap);
    if (ec == std::errc() && ptr == text.data() + text.size() && cap > 0)
      threads = std::min(threads, cap);
  }
  return threads;
}

}  // namespace spectral_cs
