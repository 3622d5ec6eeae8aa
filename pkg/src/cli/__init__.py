"""nnf 명령줄 인터페이스 (진입점은 src.cli.main:run)"""
