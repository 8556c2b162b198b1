public abstract class Abstract5 extends State {
}
