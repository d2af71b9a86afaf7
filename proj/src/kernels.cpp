#include "conekit/kernels.hpp"

#include <stdexcept>

namespace conekit::kernels {

#if defined(__x86_64__) || defined(_M_X64)
const Ops* avx2_ops_impl();
#endif
#if defined(__aarch64__) || defined(_M_ARM64)
const Ops* neon_ops_impl();
#endif

const Ops* ops_for(Backend backend) {
  switch (backend) {
    case Backend::Scalar:
      return &scalar_ops();
    case Backend::Avx2:
#if defined(__x86_64__) || defined(_M_X64)
      if (__builtin_cpu_supports("avx2")) return avx2_ops_impl();
#endif
      return nullptr;
    case Backend::Neon:
#if defined(__aarch64__) || defined(_M_ARM64)
      return neon_ops_impl();
#else
      return nullptr;
#endif
  }
  return nullptr;
}

std::vector<Backend> available_backends() {
  std::vector<Backend> out{Backend::Scalar};
  if (ops_for(Backend::Avx2)) out.push_back(Backend::Avx2);
  if (ops_for(Backend::Neon)) out.push_back(Backend::Neon);
  return out;
}

const char* backend_name(Backend backend) {
  switch (backend) {
    case Backend::Scalar: return "scalar";
    case Backend::Avx2: return "avx2";
    case Backend::Neon: return "neon";
  }
  return "unknown";
}

namespace {

struct Active {
  const Ops* ops;
  Backend backend;
};

Active resolve_best() {
  if (const Ops* o = ops_for(Backend::Avx2)) return {o, Backend::Avx2};
  if (const Ops* o = ops_for(Backend::Neon)) return {o, Backend::Neon};
  return {&scalar_ops(), Backend::Scalar};
}

Active& active_state() {
  static Active state = resolve_best();
  return state;
}

}  // namespace

const Ops& active() { return *active_state().ops; }

Backend active_backend() { return active_state().backend; }

void set_active(Backend backend) {
  const Ops* o = ops_for(backend);
  if (!o) {
    throw std::invalid_argument(std::string("kernel backend unavailable: ") +
                                backend_name(backend));
  }
  active_state() = {o, backend};
}

}  // namespace conekit::kernels
