#pragma once

#include <memory>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace enumfpt {

// Canonical byte encoding of a solution. Two solutions are equal iff their
// encodings are byte-identical.
using Solution = std::string;

// Pull-based, pausable producer. The whole traversal state lives inside the
// source, so a stream can be left half-consumed and resumed at any time, and
// any number of streams can be pulled in an interleaved fashion.
//
// Streams are move-only and must not be pulled from two threads at once.
template <class T>
class Stream {
 public:
  class Source {
   public:
    virtual ~Source() = default;
    virtual std::optional<T> next() = 0;
  };

  Stream() = default;
  explicit Stream(std::unique_ptr<Source> source) : source_(std::move(source)) {}

  // Returns the next item, or nullopt once exhausted. Calling next() again
  // after exhaustion keeps returning nullopt.
  std::optional<T> next() {
    if (!source_) return std::nullopt;
    auto item = source_->next();
    if (!item) source_.reset();
    return item;
  }

  bool exhausted() const noexcept { return !source_; }

 private:
  std::unique_ptr<Source> source_;
};

using SolutionStream = Stream<Solution>;

namespace detail {

template <class T, class Fn>
class FunctionSource final : public Stream<T>::Source {
 public:
  explicit FunctionSource(Fn fn) : fn_(std::move(fn)) {}
  std::optional<T> next() override { return fn_(); }

 private:
  Fn fn_;
};

}  // namespace detail

// Wraps a (possibly stateful, move-only) callable returning optional<T>.
template <class T, class Fn>
Stream<T> make_stream(Fn fn) {
  return Stream<T>(std::make_unique<detail::FunctionSource<T, Fn>>(std::move(fn)));
}

template <class T>
Stream<T> empty_stream() {
  return Stream<T>();
}

template <class T>
Stream<T> stream_of(std::vector<T> items) {
  return make_stream<T>([items = std::move(items), pos = std::size_t{0}]() mutable -> std::optional<T> {
    if (pos == items.size()) return std::nullopt;
    return std::move(items[pos++]);
  });
}

template <class T, class Fn>
auto map_stream(Stream<T> in, Fn fn) {
  using U = std::invoke_result_t<Fn&, T&&>;
  return make_stream<U>([in = std::move(in), fn = std::move(fn)]() mutable -> std::optional<U> {
    auto item = in.next();
    if (!item) return std::nullopt;
    return fn(std::move(*item));
  });
}

// Pulls a stream to exhaustion. Test and CLI convenience.
template <class T>
std::vector<T> drain(Stream<T>& stream) {
  std::vector<T> out;
  while (auto item = stream.next()) out.push_back(std::move(*item));
  return out;
}

template <class T>
std::vector<T> drain(Stream<T>&& stream) {
  return drain(stream);
}

}  // namespace enumfpt
