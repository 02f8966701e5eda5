from pydantic import BaseModel, ConfigDict


class ABCSchema(BaseModel):
    """Базовая модель Pydantic для доменных типов корпуса.

    Этот класс используется для представления и валидации данных.
    Все доменные значения неизменяемы после создания, поэтому их
    можно разделять между параллельными задачами.

    Конфигурация модели:
    ---------------------
    - `frozen`: Запрещает изменение полей после создания экземпляра.
    - `from_attributes`: Позволяет создавать экземпляры модели из
        объектов с атрибутами.
    - `populate_by_name`: Позволяет заполнять поля модели по
        имени, даже если они не совпадают с именами атрибутов.
    - `arbitrary_types_allowed`: Разрешает использование произвольных
        типов в качестве полей модели (например, numpy массивов).
    """

    model_config = ConfigDict(
        frozen=True,
        from_attributes=True,
        populate_by_name=True,
        arbitrary_types_allowed=True,
    )
