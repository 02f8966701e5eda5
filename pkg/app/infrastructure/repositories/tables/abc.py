import csv
from pathlib import Path
from typing import Any, Dict, Generic, Iterable, List, Type, TypeVar

from pydantic import ValidationError

from core import settings
from core.exceptions import MetadataError
from infrastructure.schemas import ABCSchema

S = TypeVar("S", bound=ABCSchema)


class ABCTableRepository(Generic[S]):
    """Репозиторий для работы с CSV таблицей строк одной схемы.

    Этот класс предоставляет базовую функциональность чтения и записи
    таблицы с фиксированным заголовком и обеспечивает проверку типов
    для аргументов конструктора.
    Аттрибуты schema, file_name и header необходимо переопределять в
    наследниках.

    :param schema: Схема, с которой будет работать репозиторий.
        Должна наследоваться от ABCSchema.

    :raises TypeError: Если аргумент directory не является Path или если
        атрибут schema не наследуется от ABCSchema.
    """

    schema: Type[S]
    file_name: str
    header: tuple[str, ...]

    def __init__(self, directory: Path):
        """Инициализация репозитория.

        :param directory: Директория, в которой лежит таблица.
        """
        if not isinstance(directory, Path):
            raise TypeError("Аргумент directory должен быть Path.")

        if not issubclass(self.schema, ABCSchema) or self.schema is ABCSchema:
            raise TypeError("Аттрибут schema должен наследоваться от ABCSchema.")

        self.directory = directory

    @property
    def path(self) -> Path:
        """Путь к файлу таблицы."""
        return self.directory / self.file_name

    def exists(self) -> bool:
        """Метод проверяет наличие файла таблицы.

        :return: True - файл есть, False - файл отсутствует.
        """
        return self.path.is_file()

    def create_schema_from_row(self, row: Dict[str, str]) -> S:
        """Создает экземпляр схемы из строки таблицы.

        :param row: Строка таблицы, словарь столбец -> текст.
        :return: Новый экземпляр схемы.
        """
        return self.schema.model_validate(self.prepare_row(row))

    def prepare_row(self, row: Dict[str, str]) -> Dict[str, Any]:
        """Приводит текстовые значения строки к полям схемы.

        По умолчанию строка передается без изменений.
        """
        return dict(row)

    def create_row_from_schema(self, schema: S) -> Dict[str, str]:
        """Создает строку таблицы из экземпляра схемы.

        :param schema: Экземпляр схемы.
        :return: Словарь столбец -> текст.
        """
        data = schema.model_dump(mode="json")
        return {column: str(data[column]) for column in self.header}

    def _check_header(self, fieldnames: Any) -> None:
        """Проверяет, что заголовок совпадает с ожидаемым по составу и порядку."""
        if fieldnames is None:
            raise MetadataError(self.file_name, "file is empty", line=1)
        if tuple(fieldnames) != self.header:
            raise MetadataError(
                self.file_name,
                f"header must be {','.join(self.header)!r}",
                line=1,
            )

    def _parse_row(self, row: Dict[Any, Any], line: int) -> S:
        """Проверяет число полей строки и создает из нее схему.

        :raises MetadataError: Строка не соответствует схеме.
        """
        if None in row or any(value is None for value in row.values()):
            raise MetadataError(
                self.file_name,
                f"row must have {len(self.header)} fields",
                line=line,
            )
        try:
            return self.create_schema_from_row(row)
        except ValidationError as exc:
            error = exc.errors()[0]
            column = str(error["loc"][0]) if error["loc"] else None
            raise MetadataError(
                self.file_name, error["msg"], line=line, column=column
            ) from exc
        except MetadataError as exc:
            raise MetadataError(
                self.file_name, exc.reason, line=line, column=exc.column
            ) from exc

    def load(self) -> List[S]:
        """Читает все строки таблицы.

        :raises MetadataError: Файл отсутствует, не читается в кодировке
            таблиц, заголовок неверный или строка не соответствует схеме.
        :return: Список экземпляров схемы в порядке файла.
        """
        if not self.exists():
            raise MetadataError(self.file_name, "file is missing")

        result: List[S] = []
        encoding = settings.CORPUS.CSV_ENCODING
        with self.path.open(newline="", encoding=encoding) as file:
            reader = csv.DictReader(file)
            try:
                self._check_header(reader.fieldnames)
                for row in reader:
                    result.append(self._parse_row(row, reader.line_num))
            except UnicodeDecodeError as exc:
                raise MetadataError(
                    self.file_name,
                    f"text is not valid {encoding}",
                    line=reader.line_num + 1,
                ) from exc
            except csv.Error as exc:
                raise MetadataError(
                    self.file_name, f"malformed CSV: {exc}", line=reader.line_num
                ) from exc
        return result

    def dump(self, schemas: Iterable[S]) -> None:
        """Записывает таблицу в канонической форме.

        Строки пишутся в переданном порядке, разделитель строк `\\n`,
        кавычки только там, где они нужны.

        :param schemas: Экземпляры схемы.
        """
        self.directory.mkdir(parents=True, exist_ok=True)
        encoding = settings.CORPUS.CSV_ENCODING
        with self.path.open("w", newline="", encoding=encoding) as file:
            writer = csv.DictWriter(file, fieldnames=self.header, lineterminator="\n")
            writer.writeheader()
            writer.writerows(self.create_row_from_schema(item) for item in schemas)
