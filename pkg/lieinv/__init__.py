"""
lieinv 패키지

4차원 실가해 Lie 대수 위 불변 구조 (복소, 심플렉틱, Kähler, 코호몰로지) 를
정확한 유리수/가우스 유리수 연산으로 다시 계산하고, 수록된 표와 비교한다.

- linalg / forms / lie          : 정확 선형대수, 외대수, 구조상수
- catalog                      : Table 2.1 의 16 family
- cohomology                   : Chevalley-Eilenberg 복합체와 Betti 수
- complex_structures           : 복소 부분대수, Nijenhuis, grid 탐색, 템플릿
- symplectic / kahler          : 닫힌 2-형식 family, Pfaffian, 호환 family
- tables / verify / report     : 표 데이터, 검증 실행, 출력
- commands / main              : click CLI
"""

__version__ = "0.1.0"
