#!/usr/bin/env python3
"""
Parallel execution of independent tasks for the expander-maps project.

Runs sampler chunks and pipeline trials concurrently with optional progress
tracking using the Rich library. Results always come back in task order.
"""

import concurrent.futures
from typing import Any, Callable, List, Optional, Sequence

from rich.console import Console
from rich.progress import (
    BarColumn,
    MofNCompleteColumn,
    Progress,
    SpinnerColumn,
    TextColumn,
)


class ParallelRunner:
    """Maps a picklable function over tasks, in worker processes when max_workers > 1"""

    def __init__(
        self,
        max_workers: int = 1,
        description: str = "Running tasks...",
        show_progress: bool = False,
        console: Optional[Console] = None,
    ):
        self.max_workers = max_workers
        self.description = description
        self.show_progress = show_progress
        self.console = console or Console(stderr=True)

    def _progress(self) -> Progress:
        return Progress(
            SpinnerColumn(),
            TextColumn("[progress.description]{task.description}"),
            BarColumn(),
            MofNCompleteColumn(),
            console=self.console,
            transient=False,
            disable=not self.show_progress,
        )

    def map(self, func: Callable[[Any], Any], tasks: Sequence[Any]) -> List[Any]:
        """Results in task order; the first failing task aborts the batch"""
        results: List[Any] = [None] * len(tasks)

        with self._progress() as progress:
            main_task = progress.add_task(self.description, total=len(tasks))

            if self.max_workers <= 1 or len(tasks) <= 1:
                for index, task in enumerate(tasks):
                    results[index] = func(task)
                    progress.update(main_task, advance=1)
            else:
                # Processes: every task is CPU bound
                with concurrent.futures.ProcessPoolExecutor(
                    max_workers=self.max_workers
                ) as executor:
                    future_to_index = {
                        executor.submit(func, task): index
                        for index, task in enumerate(tasks)
                    }
                    for future in concurrent.futures.as_completed(future_to_index):
                        index = future_to_index[future]
                        results[index] = future.result()
                        progress.update(main_task, advance=1, description=f"Finished task {index}")

            progress.update(main_task, description=f"Completed {len(tasks)} tasks")

        return results
