#ifndef HORNEX_DETAIL_OVERLOADED_HPP
#define HORNEX_DETAIL_OVERLOADED_HPP

namespace hornex::detail {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace hornex::detail

#endif  // HORNEX_DETAIL_OVERLOADED_HPP
