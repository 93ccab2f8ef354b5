#include <cstdlib>
#include <iostream>
#include <string>

#include "absa/kernels/kernels.hpp"
#include "absa/util/errors.hpp"

namespace absa::kernels {

const Ops* avx2_ops_compiled();  // defined in kernels_avx2.cpp

namespace {

bool cpu_has_avx2_fma() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const Ops* pick_default() {
  if (const char* env = std::getenv("ABSA_KERNELS")) {
    const std::string v(env);
    if (v == "scalar") return &scalar_ops();
    if (v == "avx2") {
      if (const Ops* t = avx2_ops()) return t;
      std::cerr << "absa: ABSA_KERNELS=avx2 requested but unavailable, using scalar\n";
      return &scalar_ops();
    }
    if (!v.empty() && v != "auto") {
      std::cerr << "absa: unknown ABSA_KERNELS value '" << v << "', using auto\n";
    }
  }
  if (const Ops* t = avx2_ops()) return t;
  return &scalar_ops();
}

const Ops*& active_slot() {
  static const Ops* active = pick_default();
  return active;
}

}  // namespace

bool avx2_supported() {
  return cpu_has_avx2_fma() && avx2_ops_compiled() != nullptr;
}

const Ops* avx2_ops() {
  return avx2_supported() ? avx2_ops_compiled() : nullptr;
}

const Ops& ops() { return *active_slot(); }

Backend active_backend() {
  return active_slot() == &scalar_ops() ? Backend::kScalar : Backend::kAvx2;
}

std::string_view backend_name(Backend b) {
  return b == Backend::kScalar ? "scalar" : "avx2";
}

void select_backend(Backend b) {
  if (b == Backend::kScalar) {
    active_slot() = &scalar_ops();
    return;
  }
  const Ops* t = avx2_ops();
  if (t == nullptr) throw ConfigError("avx2 kernels not available on this CPU");
  active_slot() = t;
}

}  // namespace absa::kernels
