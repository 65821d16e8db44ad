#ifndef BPCG_HERDING_KERNEL_KIND_HPP
#define BPCG_HERDING_KERNEL_KIND_HPP

#include <string_view>

namespace bpcg {

enum class KernelKind { Matern32, Matern52, Gaussian };

std::string_view to_string(KernelKind kind);
KernelKind kernel_kind_from_string(std::string_view text);

}  // namespace bpcg

#endif
