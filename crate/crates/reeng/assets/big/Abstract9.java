public abstract class Abstract9 extends Abstract1 {
}
