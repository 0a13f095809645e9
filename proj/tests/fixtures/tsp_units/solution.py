# SPDX-License-Identifier: Apache-2.0
import random


class MySolution:
    def __init__(self, instance: "MyInstance") -> None:
        self.problem_instance = instance
        self.tour = list(range(instance.n))
        random.shuffle(self.tour)

    def is_feasible(self) -> bool:
        n = self.problem_instance.n
        if len(self.tour) != n:
            print("tour visits %d cities, expected %d" % (len(self.tour), n))
            return False
        if sorted(self.tour) != list(range(n)):
            print("tour does not visit every city exactly once")
            return False
        return True

    def get_objective(self) -> int:
        c = self.problem_instance.cost
        t = self.tour
        return sum(c[t[i]][t[(i + 1) % len(t)]] for i in range(len(t)))

    def save_to_file(self, file_path: str) -> None:
        with open(file_path, "w") as f:
            f.write(" ".join(str(v + 1) for v in self.tour) + "\n")

    def load_from_file(self, file_path: str) -> None:
        with open(file_path, "r") as f:
            self.tour = [int(t) - 1 for t in f.read().split()]
