import pytest

from config_loader import ConfigLoader
from graph_core import complete_graph_of, cycle_graph, path_graph
from labeller import SumLabelling

TEST_CONFIG = """
logging:
  level: INFO
  console_level: WARNING
  file_enabled: false
labeller:
  increment_cap_factor: 4
  verify_on_finalize: true
  unique_isolates: false
oracle:
  max_total_vertices: 10
  max_label_limit: 64
  default_max_label: 30
  default_max_isolates: 6
bench:
  batch_size: 2
  default_seeds: 3
output:
  json: false
"""


@pytest.fixture
def config_path(tmp_path):
    path = tmp_path / 'config.yaml'
    path.write_text(TEST_CONFIG, encoding='utf-8')
    return str(path)


@pytest.fixture
def config_loader(config_path):
    return ConfigLoader(config_path)


@pytest.fixture
def write_file(tmp_path):
    def _write(name, text):
        path = tmp_path / name
        path.write_text(text, encoding='utf-8')
        return str(path)
    return _write


@pytest.fixture
def k4():
    return complete_graph_of(4)


@pytest.fixture
def c4():
    return cycle_graph(4)


@pytest.fixture
def p5():
    return path_graph(5)


@pytest.fixture
def triangle_labelling():
    """三角形标注 (1,4,3)，孤立点 5、7；边 1-3 由顶点 4 见证"""
    return SumLabelling(vertex_labels={1: 1, 2: 4, 3: 3}, isolate_labels=(5, 7),
                        base_graph=complete_graph_of(3))


@pytest.fixture
def bad_triangle_labelling():
    """错误的三角形标注 (1,3,2)，孤立点 4、5：1+4=5 多出一条边"""
    return SumLabelling(vertex_labels={1: 1, 2: 3, 3: 2}, isolate_labels=(4, 5),
                        base_graph=complete_graph_of(3))
